from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..matcore import RationalMatrix
from ..digraph import build_digraph, reachable
from ..mclass import classify
from ..utils.errors import NotMMatrixError
from ..utils.logging_config import get_logger, DebugCategory

logger = get_logger(__name__)


class Sign(Enum):
    POS = "+"
    ZERO = "0"
    NEG = "-"


@dataclass(frozen=True)
class SignPattern:
    n: int
    signs: Tuple[Tuple[Sign, ...], ...]

    @classmethod
    def from_matrix(cls, a: RationalMatrix) -> "SignPattern":
        def sign_of(x) -> Sign:
            return Sign.POS if x > 0 else Sign.NEG if x < 0 else Sign.ZERO
        return cls(a.n, tuple(tuple(sign_of(x) for x in row) for row in a.rows))

    def at(self, i: int, j: int) -> Sign:
        return self.signs[i - 1][j - 1]

    def mismatches(self, other: "SignPattern") -> list[Tuple[int, int]]:
        return [
            (i + 1, j + 1)
            for i in range(self.n) for j in range(self.n)
            if self.signs[i][j] != other.signs[i][j]
        ]

    def render(self) -> str:
        return "\n".join(" ".join(s.value for s in row) for row in self.signs)

    def to_list(self) -> list[list[str]]:
        return [[s.value for s in row] for row in self.signs]


def predict_sign_structure(a: RationalMatrix) -> SignPattern:
    """Sign pattern of the inverse of an M-matrix read off D(A).

    Off-diagonal entries are positive exactly when a path joins the vertices;
    diagonal entries are always positive. Refuses non-M input, where the
    prediction can fail.
    """
    if not classify(a).is_m:
        raise NotMMatrixError("Sign prediction from reachability requires an M-matrix")
    graph = build_digraph(a)
    n = a.n
    signs = tuple(
        tuple(
            Sign.POS if i == j or reachable(graph, i, j) else Sign.ZERO
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )
    logger.debug(
        f"Predicted inverse sign pattern for order {n}",
        extra={"category": DebugCategory.INVERSE.value}
    )
    return SignPattern(n, signs)
