"""Inverse entries as sums over simple paths of D(A).

For i != j the entry is (1/det A) * sum over simple paths p from v_i to v_j of
(-1)^l(p) * A[p] * det A[V(p)]; diagonal entries are det A(i) / det A. A pair
with no connecting path contributes the empty sum, so its entry is 0.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from ..matcore import RationalMatrix, IndexSet, determinant, submatrix
from ..digraph import Digraph, Path, build_digraph, enumerate_simple_paths
from ..utils.errors import SingularMatrixError
from ..utils.logging_config import get_logger, DebugCategory
from .. import config

logger = get_logger(__name__)


@dataclass(frozen=True)
class PathTerm:
    path: Path
    path_product: Fraction
    sign: int
    complement_minor: Fraction

    @property
    def term_value(self) -> Fraction:
        return self.sign * self.path_product * self.complement_minor

    def to_dict(self) -> Dict[str, Any]:
        return {
            "path": list(self.path.vertices),
            "sign": self.sign,
            "product": str(self.path_product),
            "complement_minor": str(self.complement_minor),
            "value": str(self.term_value),
        }


def path_product(a: RationalMatrix, path: Path, graph: Optional[Digraph] = None) -> Fraction:
    """A[p]: 1 for a single vertex, else the product of a_ij along the edges"""
    path.validate(graph or build_digraph(a))
    product = Fraction(1)
    for i, j in path.edges():
        product *= a.rows[i - 1][j - 1]
    return product


class PathSumExpansion:
    """Evaluates the path-sum formula for one matrix.

    Complement minors are cached by vertex set; there are at most 2^n of them
    however many paths share a complement.
    """

    def __init__(self, a: RationalMatrix, path_cap: Optional[int] = None):
        self.a = a
        self.n = a.n
        self.path_cap = config.default_path_cap() if path_cap is None else path_cap
        self.det = determinant(a)
        if self.det == 0:
            raise SingularMatrixError("Path-sum inverse needs a nonsingular matrix")
        self.graph = build_digraph(a)
        self._minors: Dict[Tuple[int, ...], Fraction] = {}

    def _minor_on(self, vertices: IndexSet) -> Fraction:
        key = vertices.indices
        if key not in self._minors:
            self._minors[key] = (
                determinant(submatrix(self.a, vertices, vertices)) if key else Fraction(1)
            )
        return self._minors[key]

    def terms(self, i: int, j: int) -> list[PathTerm]:
        terms = []
        for path in enumerate_simple_paths(self.graph, i, j, self.path_cap):
            terms.append(PathTerm(
                path=path,
                path_product=path_product(self.a, path, self.graph),
                sign=-1 if path.length % 2 else 1,
                complement_minor=self._minor_on(path.complement(self.n)),
            ))
        return terms

    def entry(self, i: int, j: int) -> Tuple[Fraction, list[PathTerm]]:
        if i == j:
            return self._minor_on(IndexSet.of([i], self.n).complement(self.n)) / self.det, []
        terms = self.terms(i, j)
        total = sum((t.term_value for t in terms), Fraction(0))
        return total / self.det, terms

    def inverse(self) -> RationalMatrix:
        return RationalMatrix(tuple(
            tuple(self.entry(i, j)[0] for j in range(1, self.n + 1))
            for i in range(1, self.n + 1)
        ))


def inverse_entry_maybee(
    a: RationalMatrix,
    i: int,
    j: int,
    path_cap: Optional[int] = None
) -> Tuple[Fraction, list[PathTerm]]:
    value, terms = PathSumExpansion(a, path_cap).entry(i, j)
    logger.debug(
        f"Entry ({i}, {j}) = {value} from {len(terms)} path terms",
        extra={"category": DebugCategory.INVERSE.value}
    )
    return value, terms


def inverse_maybee(a: RationalMatrix, path_cap: Optional[int] = None) -> RationalMatrix:
    return PathSumExpansion(a, path_cap).inverse()
