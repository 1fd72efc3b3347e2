"""Deterministic generators for the named graphs and extremal families.

Every constructor emits a fixed labeling, so the graph6 output of any
construction is byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .connectivity import is_2_connected, is_connected
from .cycles import find_cycle_mod, girth, two_disjoint_cycles
from .errors import ConstructionInvalid, EmptyList
from .graph import Graph, make_graph, rho


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes i-(i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return make_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0:
        raise ValueError("side sizes must be non-negative")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def triangle() -> Graph:
    return complete(3)


# Anchor edges of the three sparse exceptional graphs: a 5-cycle 0..4 plus a
# path on 5..  The pairs below pin each path vertex to its cycle vertex.
_L_ANCHORS = {
    1: (3, (5, 3), (6, 0), (7, 2)),
    2: (4, (5, 3), (6, 1), (7, 4), (8, 2)),
    3: (5, (5, 1), (6, 3), (8, 2), (9, 4)),
}


def l_graph(which: int) -> Graph:
    """One of the three 5-cycle-plus-anchored-path graphs.

    Validation is mandatory at construction time: the result must be
    2-connected with girth 5, contain no (1 mod 3)-cycle and no two disjoint
    cycles, and satisfy rho(U) > floor(3|U|/2) for every nonempty subset U
    of the path part. A transcription slip therefore cannot propagate.
    """
    if which not in _L_ANCHORS:
        raise ValueError(f"which must be 1, 2 or 3, got {which}")
    spec = _L_ANCHORS[which]
    tree_size = spec[0]
    n = 5 + tree_size
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + i + 1) for i in range(tree_size - 1)]
    edges += list(spec[1:])
    g = make_graph(n, edges)
    _validate_l_graph(g, which, tuple(range(5, n)))
    return g


def _validate_l_graph(g: Graph, which: int, tree_vertices: tuple[int, ...]) -> None:
    if not is_2_connected(g):
        raise ConstructionInvalid(f"L{which}: not 2-connected")
    gr = girth(g)
    if gr is None or gr[0] != 5:
        raise ConstructionInvalid(f"L{which}: girth is not 5")
    if find_cycle_mod(g, (1, 3)) is not None:
        raise ConstructionInvalid(f"L{which}: contains a (1 mod 3)-cycle")
    if two_disjoint_cycles(g) is not None:
        raise ConstructionInvalid(f"L{which}: contains two disjoint cycles")
    for size in range(1, len(tree_vertices) + 1):
        for u in combinations(tree_vertices, size):
            if rho(g, u) <= 3 * size // 2:
                raise ConstructionInvalid(
                    f"L{which}: rho({list(u)}) = {rho(g, u)} fails the bound"
                )


@dataclass(frozen=True)
class ExtremalDecomposition:
    """Block multiset of the extremal family member on n vertices.

    n - 1 = 9q + r with 0 <= r <= 8 and r = 2q' + r' with r' in {0, 1};
    the edge total is 15q + 3q' + r' = 15q + floor(3r/2).
    """

    q: int
    q_prime: int
    r_prime: int
    n: int
    edges: int


def block_chain(blocks: Sequence[Graph]) -> Graph:
    """Glue blocks sequentially at single shared vertices.

    The lexicographically last vertex of each block is identified with
    vertex 0 of the next, so labelings are reproducible.
    """
    if not blocks:
        raise EmptyList("block_chain needs at least one block")
    for i, b in enumerate(blocks):
        if b.n < 1 or not is_connected(b):
            raise ValueError(f"block {i} must be connected with order >= 1")
    total = blocks[0].n
    edges = list(blocks[0].edges)
    for b in blocks[1:]:
        shared = total - 1
        mapping = [shared] + list(range(total, total + b.n - 1))
        edges.extend((mapping[u], mapping[v]) for u, v in b.edges)
        total += b.n - 1
    return make_graph(total, edges)


def extremal_family(n: int) -> tuple[Graph, ExtremalDecomposition]:
    """The chain of q Petersen blocks, q' triangles and r' single edges.

    Connected, with exactly edge_bound(n) edges and no (1 mod 3)-cycle;
    every cycle lies inside a single block.
    """
    if n < 1:
        raise ValueError(f"extremal family needs n >= 1, got {n}")
    q, r = divmod(n - 1, 9)
    q_prime, r_prime = divmod(r, 2)
    decomp = ExtremalDecomposition(q, q_prime, r_prime, n, 15 * q + 3 * q_prime + r_prime)
    parts = [petersen()] * q + [triangle()] * q_prime
    parts += [make_graph(2, [(0, 1)])] * r_prime
    if not parts:
        return make_graph(1, []), decomp
    g = block_chain(parts)
    return g, decomp
