from .graph import (
    Digraph,
    Path,
    build_digraph,
    enumerate_simple_paths,
    reachable,
    shortest_path,
    is_irreducible,
    to_dot,
)

__all__ = [
    "Digraph",
    "Path",
    "build_digraph",
    "enumerate_simple_paths",
    "reachable",
    "shortest_path",
    "is_irreducible",
    "to_dot",
]
