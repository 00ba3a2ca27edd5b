"""Random matrix families for property sweeps.

M-matrices are built by diagonal dominance: non-positive off-diagonal entries
and a diagonal exceeding each row's off-diagonal mass by `dominance_slack`,
so every row sum is positive. Every draw is deterministic in its seed.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np

from ..matcore import RationalMatrix, to_rational, determinant
from ..mclass import is_z_matrix, check_inverse_nonneg
from ..utils.errors import GeneratorSpecError, SizeLimitError, InternalInconsistencyError
from ..utils.logging_config import get_logger, DebugCategory

logger = get_logger(__name__)

RANDOM_MAX_ORDER = 12
EXHAUSTIVE_MAX_ORDER = 8
MAX_NONSINGULAR_ATTEMPTS = 1000

Position = Tuple[int, int]


class PatternMode(Enum):
    RANDOM = "random"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class GeneratorSpec:
    order: int
    band: Tuple[int, int] = (1, 1)
    sign_pattern_mode: PatternMode = PatternMode.RANDOM
    magnitude_range: Tuple[int, int] = (1, 5)
    dominance_slack: Fraction = Fraction(1)
    seed: int = 0
    zero_probability: float = 0.5

    def __post_init__(self):
        cap = EXHAUSTIVE_MAX_ORDER if self.sign_pattern_mode is PatternMode.EXHAUSTIVE else RANDOM_MAX_ORDER
        if not 1 <= self.order <= cap:
            raise SizeLimitError(
                f"Order {self.order} outside 1..{cap} for {self.sign_pattern_mode.value} generation"
            )
        lower, upper = self.band
        if lower < 0 or upper < 0:
            raise GeneratorSpecError(f"Band widths must be non-negative: {self.band}")
        low, high = self.magnitude_range
        if low < 0 or high < low:
            raise GeneratorSpecError(f"Invalid magnitude range {self.magnitude_range}")
        if to_rational(self.dominance_slack) <= 0:
            raise GeneratorSpecError("dominance_slack must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise GeneratorSpecError("seed must be a 64-bit unsigned integer")
        if not 0 <= self.zero_probability <= 1:
            raise GeneratorSpecError("zero_probability must lie in [0, 1]")


def in_band_positions(order: int, band: Tuple[int, int]) -> list[Position]:
    """Off-diagonal (i, j) with i - j <= lower and j - i <= upper, row-major"""
    lower, upper = band
    return [
        (i, j)
        for i in range(1, order + 1)
        for j in range(1, order + 1)
        if i != j and i - j <= lower and j - i <= upper
    ]


def dominant_matrix(order: int, off_diagonal: Dict[Position, Fraction], slack) -> RationalMatrix:
    """Z-matrix with the given off-diagonal entries and a_ii = row mass + slack"""
    slack = to_rational(slack)
    rows = [[Fraction(0)] * order for _ in range(order)]
    for (i, j), value in off_diagonal.items():
        rows[i - 1][j - 1] = -abs(to_rational(value))
    for i in range(order):
        rows[i][i] = sum((-x for x in rows[i]), Fraction(0)) + slack
    return RationalMatrix(tuple(tuple(row) for row in rows))


def _draw_off_diagonal(
    rng: np.random.Generator,
    positions: list[Position],
    magnitude_range: Tuple[int, int],
    zero_probability: float
) -> Dict[Position, Fraction]:
    low, high = magnitude_range
    drawn = {}
    for position in positions:
        if rng.random() < zero_probability:
            continue
        drawn[position] = Fraction(int(rng.integers(low, high + 1)))
    return drawn


def _verified(a: RationalMatrix, spec: GeneratorSpec) -> RationalMatrix:
    """A Z-matrix with a nonnegative inverse is a nonsingular M-matrix"""
    if not (is_z_matrix(a) and check_inverse_nonneg(a).holds):
        logger.error(
            f"Dominance draw failed classification (order {spec.order}, seed {spec.seed})",
            extra={"category": DebugCategory.SEARCH.value}
        )
        raise InternalInconsistencyError(
            f"Dominance construction produced a non-M matrix for seed {spec.seed}", details=a
        )
    return a


def random_m_matrix(spec: GeneratorSpec) -> RationalMatrix:
    rng = np.random.default_rng(spec.seed)
    positions = in_band_positions(spec.order, spec.band)
    off_diagonal = _draw_off_diagonal(rng, positions, spec.magnitude_range, spec.zero_probability)
    return _verified(dominant_matrix(spec.order, off_diagonal, spec.dominance_slack), spec)


def enforce_condition_tri(order: int, off_diagonal: Dict[Position, Fraction]) -> Dict[Position, Fraction]:
    """Zero the consequent of every triggered implication of condition (3)"""
    result = {p: v for p, v in off_diagonal.items() if v != 0}
    for i in range(2, order):
        if (i, i - 1) in result:
            result.pop((i + 1, i), None)
        if (i - 1, i) in result:
            result.pop((i, i + 1), None)
    return result


def random_tridiagonal_m_matrix(spec: GeneratorSpec, satisfy_condition: bool) -> RationalMatrix:
    """Tridiagonal M-matrix; with satisfy_condition it also meets condition (3)"""
    if spec.band != (1, 1):
        raise GeneratorSpecError(f"Tridiagonal generation needs band (1, 1), got {spec.band}")
    rng = np.random.default_rng(spec.seed)
    positions = in_band_positions(spec.order, spec.band)
    off_diagonal = _draw_off_diagonal(rng, positions, spec.magnitude_range, spec.zero_probability)
    if satisfy_condition:
        off_diagonal = enforce_condition_tri(spec.order, off_diagonal)
    return _verified(dominant_matrix(spec.order, off_diagonal, spec.dominance_slack), spec)


def random_z_matrix(
    order: int,
    seed: int,
    magnitude_range: Tuple[int, int] = (0, 3),
    diagonal_range: Tuple[int, int] = (-1, 8)
) -> RationalMatrix:
    """Z-matrix with a random diagonal; M or not, depending on the draw"""
    rng = np.random.default_rng(seed)
    low, high = magnitude_range
    rows = [
        [
            Fraction(int(rng.integers(*diagonal_range, endpoint=True))) if i == j
            else -Fraction(int(rng.integers(low, high + 1)))
            for j in range(order)
        ]
        for i in range(order)
    ]
    return RationalMatrix(tuple(tuple(row) for row in rows))


def random_banded_matrix(
    order: int,
    seed: int,
    band: Optional[Tuple[int, int]] = None,
    magnitude: int = 3,
    zero_probability: float = 0.5
) -> RationalMatrix:
    """Nonsingular matrix with signed integer entries, redrawn until det != 0.

    Without a band every position is eligible.
    """
    rng = np.random.default_rng(seed)
    band = band or (order, order)
    positions = set(in_band_positions(order, band))
    for _ in range(MAX_NONSINGULAR_ATTEMPTS):
        rows = []
        for i in range(1, order + 1):
            row = []
            for j in range(1, order + 1):
                if i != j and ((i, j) not in positions or rng.random() < zero_probability):
                    row.append(Fraction(0))
                else:
                    row.append(Fraction(int(rng.integers(-magnitude, magnitude + 1))))
            rows.append(tuple(row))
        candidate = RationalMatrix(tuple(rows))
        if determinant(candidate) != 0:
            return candidate
    raise InternalInconsistencyError(
        f"No nonsingular draw in {MAX_NONSINGULAR_ATTEMPTS} attempts (order {order}, seed {seed})"
    )


def random_matrix(order: int, seed: int, magnitude: int = 3, zero_probability: float = 0.5) -> RationalMatrix:
    return random_banded_matrix(order, seed, None, magnitude, zero_probability)
