from .matrix import (
    Rational,
    IndexSet,
    RationalMatrix,
    to_rational,
    submatrix,
    principal_complement,
    bandwidth,
)
from .determinant import determinant, principal_minor, complement_minor
from .inverse import inverse_direct

__all__ = [
    "Rational",
    "IndexSet",
    "RationalMatrix",
    "to_rational",
    "submatrix",
    "principal_complement",
    "bandwidth",
    "determinant",
    "principal_minor",
    "complement_minor",
    "inverse_direct",
]
