"""Immutable undirected simple graphs on dense integer vertices 0..n-1.

All operations in the package are pure functions over this type, so graphs
are safe to share across concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidVertex, LoopRejected

Edge = tuple[int, int]


class Graph:
    """An undirected simple graph: no loops, no multi-edges.

    Vertices are the integers ``0..n-1``. The edge set is stored sorted, the
    adjacency lists are derived from it, and ``adj_bits[v]`` holds the
    neighbourhood of ``v`` as a bitmask for the search kernels.
    """

    __slots__ = ("n", "edges", "adj", "adj_bits", "_edge_set", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise InvalidVertex(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for pair in edges:
            u, v = pair
            if not (0 <= u < n) or not (0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopRejected(f"loop edge ({u}, {v}) rejected")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        bits = [0] * n
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.adj_bits: tuple[int, ...] = tuple(bits)
        self._edge_set = frozenset(self.edges)
        self._hash = hash((n, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a validated graph; duplicate and reversed pairs collapse.

    Raises ``InvalidVertex`` for out-of-range endpoints and ``LoopRejected``
    for edges of the form (v, v).
    """
    return Graph(n, edges)


def vertex_set(g: Graph, ids: Iterable[int]) -> tuple[int, ...]:
    """Normalize ``ids`` to a sorted duplicate-free tuple within range."""
    out = sorted(set(ids))
    if out and (out[0] < 0 or out[-1] >= g.n):
        raise InvalidVertex(f"vertex set {out} out of range for n={g.n}")
    return tuple(out)


@dataclass(frozen=True)
class DegreeStats:
    """Degree summary: minimum, maximum, descending sequence and N_2.

    ``min_degree_defined`` is False on the empty graph, where the minimum is
    reported as 0 by convention.
    """

    min_degree: int
    max_degree: int
    degree_sequence: tuple[int, ...]
    n2: tuple[int, ...]
    min_degree_defined: bool


def degree_stats(g: Graph) -> DegreeStats:
    """Compute (delta, max degree, descending degree sequence, N_2)."""
    degrees = [g.degree(v) for v in range(g.n)]
    n2 = tuple(v for v in range(g.n) if degrees[v] == 2)
    if not degrees:
        return DegreeStats(0, 0, (), (), False)
    return DegreeStats(
        min(degrees), max(degrees), tuple(sorted(degrees, reverse=True)), n2, True
    )


def rho(g: Graph, u: Iterable[int]) -> int:
    """Number of edges incident to at least one vertex of ``u``."""
    members = set(vertex_set(g, u))
    return sum(1 for a, b in g.edges if a in members or b in members)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``.

    Returns the new graph together with the list mapping new ids back to the
    original ids (new id i corresponds to ``kept[i]``).
    """
    kept = vertex_set(g, vertices)
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[a], index[b]) for a, b in g.edges if a in index and b in index
    ]
    return Graph(len(kept), edges), kept


def union_of_graphs(parts: Sequence[Graph]) -> Graph:
    """Disjoint union; part i's vertices are shifted past parts 0..i-1."""
    offset = 0
    n = 0
    edges: list[Edge] = []
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges)
        offset += part.n
        n = offset
    return Graph(n, edges)
