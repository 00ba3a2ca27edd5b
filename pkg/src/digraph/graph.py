from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Tuple

import networkx as nx

from ..matcore import RationalMatrix, IndexSet
from ..utils.errors import InvalidPathError, PathExplosionError, InvalidIndexError
from ..utils.logging_config import get_logger, DebugCategory
from .. import config

logger = get_logger(__name__)


@dataclass(frozen=True)
class Digraph:
    """D(A): vertices 1..n, edge (i, j) for i != j whenever a_ij != 0"""
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    # Only consulted for n = 1, where irreducibility depends on the entry itself
    source_nonzero: bool = True

    def out_neighbors(self, i: int) -> Tuple[int, ...]:
        self._check_vertex(i)
        return self.adjacency[i - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.out_neighbors(i)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i, targets in enumerate(self.adjacency, start=1):
            for j in targets:
                yield i, j

    @cached_property
    def nx_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges())
        return graph

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise InvalidIndexError(f"Vertex {i} outside 1..{self.n}")


@dataclass(frozen=True)
class Path:
    vertices: Tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise InvalidPathError("A path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPathError(f"Path vertices must be distinct: {self.vertices}")

    @property
    def length(self) -> int:
        """l(p), the number of edges"""
        return len(self.vertices) - 1

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    @property
    def vertex_set(self) -> IndexSet:
        """V[p]"""
        return IndexSet(tuple(sorted(self.vertices)))

    def complement(self, n: int) -> IndexSet:
        """V(p): vertices not on the path"""
        return self.vertex_set.complement(n)

    def edges(self) -> Iterator[Tuple[int, int]]:
        return zip(self.vertices, self.vertices[1:])

    def validate(self, graph: Digraph) -> None:
        for i, j in self.edges():
            if not graph.has_edge(i, j):
                raise InvalidPathError(f"({i}, {j}) is not an edge of the digraph")


def build_digraph(a: RationalMatrix) -> Digraph:
    n = a.n
    adjacency = tuple(
        tuple(j + 1 for j in range(n) if j != i and a.rows[i][j] != 0)
        for i in range(n)
    )
    source_nonzero = any(x != 0 for row in a.rows for x in row)
    return Digraph(n, adjacency, source_nonzero)


def enumerate_simple_paths(
    graph: Digraph,
    source: int,
    target: int,
    cap: Optional[int] = None
) -> list[Path]:
    """Every simple path source -> target, in lexicographic vertex order.

    Raises PathExplosionError as soon as more than `cap` paths exist; a
    truncated list is never returned.
    """
    cap = config.default_path_cap() if cap is None else cap
    graph._check_vertex(source)
    graph._check_vertex(target)
    if source == target:
        raise InvalidIndexError("Path enumeration needs distinct endpoints")
    if cap <= 0:
        raise ValueError("Path cap must be positive")

    paths: list[Path] = []
    for vertices in nx.all_simple_paths(graph.nx_graph, source, target):
        if len(paths) == cap:
            logger.warning(
                f"Path cap {cap} exceeded for v{source} -> v{target}",
                extra={"category": DebugCategory.GRAPH.value}
            )
            raise PathExplosionError(cap, source, target)
        paths.append(Path(tuple(vertices)))
    paths.sort(key=lambda p: p.vertices)
    return paths


def reachable(graph: Digraph, source: int, target: int) -> bool:
    graph._check_vertex(source)
    graph._check_vertex(target)
    if source == target:
        raise InvalidIndexError("Reachability is asked between distinct vertices")
    return nx.has_path(graph.nx_graph, source, target)


def shortest_path(graph: Digraph, source: int, target: int) -> Optional[Path]:
    """A shortest witness path, or None when target is unreachable"""
    try:
        return Path(tuple(nx.shortest_path(graph.nx_graph, source, target)))
    except nx.NetworkXNoPath:
        return None


def is_irreducible(graph: Digraph) -> bool:
    """Strong connectivity of D(A); a 1x1 matrix is irreducible iff nonzero"""
    if graph.n == 1:
        return graph.source_nonzero
    return nx.is_strongly_connected(graph.nx_graph)


def to_dot(graph: Digraph, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  v{i};" for i in range(1, graph.n + 1))
    lines.extend(f"  v{i} -> v{j};" for i, j in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
