from fractions import Fraction

from .matrix import RationalMatrix
from ..utils.errors import SingularMatrixError
from ..utils.logging_config import get_logger, DebugCategory

logger = get_logger(__name__)


def inverse_direct(a: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals"""
    n = a.n
    augmented = [
        list(row) + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a.rows)
    ]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if augmented[r][col] != 0), None)
        if pivot_row is None:
            logger.debug(
                f"No pivot in column {col + 1} of an order-{n} matrix",
                extra={"category": DebugCategory.MATRIX.value}
            )
            raise SingularMatrixError(f"Matrix of order {n} is singular")
        augmented[col], augmented[pivot_row] = augmented[pivot_row], augmented[col]
        pivot = augmented[col][col]
        augmented[col] = [x / pivot for x in augmented[col]]
        for r in range(n):
            factor = augmented[r][col]
            if r != col and factor != 0:
                augmented[r] = [x - factor * y for x, y in zip(augmented[r], augmented[col])]
    return RationalMatrix(tuple(tuple(row[n:]) for row in augmented))
