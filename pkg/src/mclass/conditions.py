"""Individual M-matrix tests; each takes an exact matrix and returns a
verdict plus whatever witness the test naturally produces."""
import math
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Tuple

from .. import config
from ..matcore import RationalMatrix, IndexSet, principal_minor, inverse_direct
from ..utils.errors import SizeLimitError, NotZMatrixError, SingularMatrixError, InternalInconsistencyError
from ..utils.logging_config import get_logger, DebugCategory

logger = get_logger(__name__)


class MinorCheck(NamedTuple):
    holds: bool
    failing_set: Optional[IndexSet] = None
    failing_value: Optional[Fraction] = None


class InverseCheck(NamedTuple):
    holds: bool
    failing_entry: Optional[Tuple[int, int]] = None
    singular: bool = False
    inverse: Optional[RationalMatrix] = None


class VectorCheck(NamedTuple):
    holds: bool
    witness: Optional[Tuple[Fraction, ...]] = None


def is_z_matrix(a: RationalMatrix) -> bool:
    n = a.n
    return all(a.rows[i][j] <= 0 for i in range(n) for j in range(n) if i != j)


def subsets_lexicographic(n: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty subsets of 1..n in lexicographic order of their sorted tuples"""
    def extend(prefix: Tuple[int, ...], start: int) -> Iterator[Tuple[int, ...]]:
        for i in range(start, n + 1):
            current = prefix + (i,)
            yield current
            yield from extend(current, i + 1)
    yield from extend((), 1)


def check_principal_minors(a: RationalMatrix) -> MinorCheck:
    """All 2^n - 1 principal minors positive; reports the first failing set"""
    n = a.n
    if n > config.MAX_MINOR_ORDER:
        raise SizeLimitError(
            f"Principal minor enumeration is capped at order {config.MAX_MINOR_ORDER}, got {n}"
        )
    for alpha in subsets_lexicographic(n):
        value = principal_minor(a, alpha)
        if value <= 0:
            logger.debug(
                f"Principal minor on {list(alpha)} is {value}",
                extra={"category": DebugCategory.CLASSIFY.value}
            )
            return MinorCheck(False, IndexSet(alpha), value)
    return MinorCheck(True)


def is_p_matrix(a: RationalMatrix) -> bool:
    return check_principal_minors(a).holds


def check_inverse_nonneg(a: RationalMatrix) -> InverseCheck:
    try:
        inverse = inverse_direct(a)
    except SingularMatrixError:
        return InverseCheck(False, singular=True)
    for i, row in enumerate(inverse.rows, start=1):
        for j, x in enumerate(row, start=1):
            if x < 0:
                return InverseCheck(False, (i, j), inverse=inverse)
    return InverseCheck(True, inverse=inverse)


def _integer_scaled(vector: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    scale = math.lcm(*(x.denominator for x in vector))
    integers = [int(x * scale) for x in vector]
    common = math.gcd(*integers) or 1
    return tuple(Fraction(x // common) for x in integers)


def _is_witness(a: RationalMatrix, x: Tuple[Fraction, ...]) -> bool:
    return all(v > 0 for v in x) and all(v > 0 for v in a.apply(x))


def check_positive_vector(a: RationalMatrix) -> VectorCheck:
    """Look for x > 0 with Ax > 0.

    Tries x = A^{-1} 1 (scaled to integers) when A^{-1} >= 0, then x = 1.
    """
    if not is_z_matrix(a):
        raise NotZMatrixError("Positive-vector test requires a Z-matrix")
    n = a.n
    ones = tuple(Fraction(1) for _ in range(n))

    inverse_check = check_inverse_nonneg(a)
    if inverse_check.holds and inverse_check.inverse is not None:
        candidate = _integer_scaled(inverse_check.inverse.apply(ones))
        if _is_witness(a, candidate):
            return VectorCheck(True, candidate)

    if _is_witness(a, ones):
        return VectorCheck(True, ones)

    if n <= config.MAX_MINOR_ORDER and check_principal_minors(a).holds:
        raise InternalInconsistencyError(
            "Principal minors are positive but no positive vector witness was found"
        )
    return VectorCheck(False)


def spectral_split(a: RationalMatrix) -> Tuple[Fraction, RationalMatrix]:
    """Write A = sI - B with s = max a_ii; returns (s, B)"""
    s = max(a.diagonal())
    n = a.n
    b = RationalMatrix(tuple(
        tuple((s if i == j else Fraction(0)) - a.rows[i][j] for j in range(n))
        for i in range(n)
    ))
    return s, b


def collatz_wielandt_bound(
    b: RationalMatrix,
    iterations: int,
    shift: Fraction,
    max_denominator: int = 10 ** 12
) -> Fraction:
    """Certified upper bound on the spectral radius of a nonnegative matrix.

    For every x > 0, rho(B) <= max_i (Bx)_i / x_i. The iterates come from power
    iteration on B + shift*I; rounding them keeps denominators small and
    cannot invalidate the bound since any positive x is admissible.
    """
    n = b.n
    x = tuple(Fraction(1) for _ in range(n))
    best: Optional[Fraction] = None
    for _ in range(max(iterations, 1)):
        bx = b.apply(x)
        bound = max(v / xi for v, xi in zip(bx, x))
        best = bound if best is None else min(best, bound)
        y = tuple(v + shift * xi for v, xi in zip(bx, x))
        top = max(y)
        if top == 0:
            break
        x = tuple(
            max((v / top).limit_denominator(max_denominator), Fraction(1, max_denominator))
            for v in y
        )
    return best


def check_spectral(
    a: RationalMatrix,
    iterations: Optional[int] = None,
    tolerance: Optional[Fraction] = None
) -> bool:
    """Advisory: True only when the certified bound on rho(B) is below s"""
    if not is_z_matrix(a):
        raise NotZMatrixError("Spectral test requires a Z-matrix")
    iterations = config.SPECTRAL_ITERATIONS if iterations is None else iterations
    shift = config.SPECTRAL_SHIFT if tolerance is None else Fraction(tolerance)
    s, b = spectral_split(a)
    bound = collatz_wielandt_bound(b, iterations, shift)
    logger.debug(
        f"Spectral split s={s}, rho(B) <= {bound}",
        extra={"category": DebugCategory.CLASSIFY.value}
    )
    return bound < s
