from .conditions import (
    MinorCheck,
    InverseCheck,
    VectorCheck,
    is_z_matrix,
    is_p_matrix,
    subsets_lexicographic,
    check_principal_minors,
    check_inverse_nonneg,
    check_positive_vector,
    spectral_split,
    collatz_wielandt_bound,
    check_spectral,
)
from .classifier import MCondition, MClassReport, classify

__all__ = [
    "MinorCheck",
    "InverseCheck",
    "VectorCheck",
    "is_z_matrix",
    "is_p_matrix",
    "subsets_lexicographic",
    "check_principal_minors",
    "check_inverse_nonneg",
    "check_positive_vector",
    "spectral_split",
    "collatz_wielandt_bound",
    "check_spectral",
    "MCondition",
    "MClassReport",
    "classify",
]
