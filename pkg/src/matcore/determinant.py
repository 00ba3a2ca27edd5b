import math
from fractions import Fraction
from typing import Iterable, Union

from .matrix import RationalMatrix, IndexSet, principal_complement, submatrix
from ..utils.errors import EmptyComplementError


def _bareiss(m: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix (mutates m)"""
    n = len(m)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // previous
        previous = pivot
    return sign * m[n - 1][n - 1]


def determinant(a: RationalMatrix) -> Fraction:
    """Exact determinant; the 0x0 matrix has determinant 1.

    Denominators are cleared with their lcm first so that Bareiss runs on
    integers, where every division is exact.
    """
    n = a.n
    if n == 0:
        return Fraction(1)
    scale = math.lcm(*(x.denominator for row in a.rows for x in row))
    scaled = [[int(x * scale) for x in row] for row in a.rows]
    return Fraction(_bareiss(scaled), scale ** n)


def principal_minor(a: RationalMatrix, alpha: Union[IndexSet, Iterable[int]]) -> Fraction:
    """det A[alpha]"""
    return determinant(submatrix(a, alpha, alpha))


def complement_minor(a: RationalMatrix, alpha: Union[IndexSet, Iterable[int]]) -> Fraction:
    """det A(alpha), with det of the empty matrix taken as 1"""
    try:
        return determinant(principal_complement(a, alpha))
    except EmptyComplementError:
        return Fraction(1)
