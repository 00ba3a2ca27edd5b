"""Two 4x4 tridiagonal M-matrix families and their closed-form inverses.

The split family satisfies condition (3) and keeps a tridiagonal inverse.
The coupled family adds a_21; when gamma = a11*a22 - a12*a21 > 0 it is still
an M-matrix, violates (3), and its inverse gains the (3, 1) entry.
"""
from fractions import Fraction

from ..matcore import RationalMatrix, to_rational


def split_tridiagonal_matrix(a11, a12, a22, a32, a33, a34, a44) -> RationalMatrix:
    return RationalMatrix.from_rows([
        [a11, a12, 0, 0],
        [0, a22, 0, 0],
        [0, a32, a33, a34],
        [0, 0, 0, a44],
    ])


def split_tridiagonal_inverse(a11, a12, a22, a32, a33, a34, a44) -> RationalMatrix:
    a11, a12, a22, a32, a33, a34, a44 = map(to_rational, (a11, a12, a22, a32, a33, a34, a44))
    zero = Fraction(0)
    return RationalMatrix((
        (1 / a11, -a12 / (a11 * a22), zero, zero),
        (zero, 1 / a22, zero, zero),
        (zero, -a32 / (a22 * a33), 1 / a33, -a34 / (a33 * a44)),
        (zero, zero, zero, 1 / a44),
    ))


def coupled_tridiagonal_matrix(a11, a12, a21, a22, a32, a33, a34, a44) -> RationalMatrix:
    return RationalMatrix.from_rows([
        [a11, a12, 0, 0],
        [a21, a22, 0, 0],
        [0, a32, a33, a34],
        [0, 0, 0, a44],
    ])


def coupled_gamma(a11, a12, a21, a22) -> Fraction:
    a11, a12, a21, a22 = map(to_rational, (a11, a12, a21, a22))
    return a11 * a22 - a12 * a21


def coupled_tridiagonal_inverse(a11, a12, a21, a22, a32, a33, a34, a44) -> RationalMatrix:
    a11, a12, a21, a22, a32, a33, a34, a44 = map(
        to_rational, (a11, a12, a21, a22, a32, a33, a34, a44)
    )
    gamma = coupled_gamma(a11, a12, a21, a22)
    zero = Fraction(0)
    rows = (
        (a22, -a12, zero, zero),
        (-a21, a11, zero, zero),
        (a21 * a32 / a33, -a11 * a32 / a33, gamma / a33, -gamma * a34 / (a33 * a44)),
        (zero, zero, zero, gamma / a44),
    )
    return RationalMatrix(tuple(tuple(x / gamma for x in row) for row in rows))
