from .path_sum import (
    PathTerm,
    PathSumExpansion,
    path_product,
    inverse_entry_maybee,
    inverse_maybee,
)
from .signs import Sign, SignPattern, predict_sign_structure

__all__ = [
    "PathTerm",
    "PathSumExpansion",
    "path_product",
    "inverse_entry_maybee",
    "inverse_maybee",
    "Sign",
    "SignPattern",
    "predict_sign_structure",
]
