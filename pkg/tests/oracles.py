"""Slow, obviously-correct reference computations used to cross-check the
library on small orders."""
from fractions import Fraction
from itertools import permutations

from src.matcore import RationalMatrix


def permutation_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def leibniz_determinant(a: RationalMatrix) -> Fraction:
    n = a.n
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(permutation_sign(perm))
        for i in range(n):
            term *= a.rows[i][perm[i]]
        total += term
    return total


def brute_force_path_count(a: RationalMatrix, source: int, target: int) -> int:
    """Simple paths source -> target by trying every ordering of intermediates"""
    n = a.n
    others = [v for v in range(1, n + 1) if v not in (source, target)]
    count = 0
    for k in range(len(others) + 1):
        for middle in permutations(others, k):
            walk = (source,) + middle + (target,)
            if all(a.entry(i, j) != 0 for i, j in zip(walk, walk[1:])):
                count += 1
    return count


def is_reducible_by_permutation(a: RationalMatrix) -> bool:
    """Some permutation brings A to block lower-triangular form [[B, 0], [C, D]]"""
    n = a.n
    if n == 1:
        return a.entry(1, 1) == 0
    for order in permutations(range(1, n + 1)):
        for k in range(1, n):
            leading, trailing = order[:k], order[k:]
            if all(a.entry(i, j) == 0 for i in leading for j in trailing):
                return True
    return False
