from fractions import Fraction
from typing import Iterator, Tuple

from ..matcore import RationalMatrix
from ..utils.errors import SizeLimitError
from .generator import EXHAUSTIVE_MAX_ORDER, Position, in_band_positions, dominant_matrix

SignPatternPositions = Tuple[Position, ...]


def _positions(order: int, band: Tuple[int, int]) -> list[Position]:
    if order > EXHAUSTIVE_MAX_ORDER:
        raise SizeLimitError(f"Exhaustive sign patterns are capped at order {EXHAUSTIVE_MAX_ORDER}")
    return in_band_positions(order, band)


def pattern_count(order: int, band: Tuple[int, int]) -> int:
    return 1 << len(_positions(order, band))


def pattern_at(order: int, band: Tuple[int, int], index: int) -> SignPatternPositions:
    """The index-th pattern: bit k of index selects the k-th in-band position"""
    positions = _positions(order, band)
    if not 0 <= index < 1 << len(positions):
        raise IndexError(f"Pattern index {index} out of range")
    return tuple(p for k, p in enumerate(positions) if index >> k & 1)


def enumerate_sign_patterns(order: int, band: Tuple[int, int]) -> Iterator[SignPatternPositions]:
    """Every subset of in-band off-diagonal positions; selected positions are
    negative, all others zero. Streamed, never materialized."""
    positions = _positions(order, band)
    return (
        tuple(p for k, p in enumerate(positions) if mask >> k & 1)
        for mask in range(1 << len(positions))
    )


def pattern_to_matrix(
    order: int,
    pattern: SignPatternPositions,
    magnitude: int = 1,
    slack: Fraction = Fraction(1)
) -> RationalMatrix:
    """Lift a sign pattern to an M-matrix by diagonal dominance"""
    return dominant_matrix(order, {p: Fraction(magnitude) for p in pattern}, slack)
