"""Exhaustive graph generation: labeled streams and isomorph-rejecting
vertex augmentation with hereditary pruning.

The augmentation generator grows graphs one vertex at a time and rejects
duplicates by canonical form. Any prune applied to intermediate levels must
be hereditary (closed under taking induced subgraphs): every target graph
then still has a surviving parent chain, so the enumeration stays complete.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Callable, Iterator

from .connectivity import is_2_connected, is_connected
from .cycles import _search_root
from .errors import CeilingExceeded
from .graph import Graph, make_graph
from .iso import canonical_form, canonical_graph

DEFAULT_CEILING = 10
_CEILING_ENV = "CYCLEMOD_CEILING"


def search_ceiling() -> int:
    """Configured enumeration ceiling (env override, conservative default)."""
    raw = os.environ.get(_CEILING_ENV)
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_CEILING


def _children(
    parent: Graph,
    max_degree: int | None,
    prefilter: Callable[[Graph, tuple[int, ...]], bool] | None = None,
) -> Iterator[Graph]:
    """All graphs obtained by attaching one new vertex to a vertex subset.

    ``prefilter`` sees (parent, attachment subset) before the child is
    materialized and may veto it; it must only veto subsets every later
    check would reject anyway.
    """
    h = parent.n
    if max_degree is None:
        eligible = list(range(h))
        top = h
    else:
        eligible = [v for v in range(h) if parent.degree(v) < max_degree]
        top = min(max_degree, h)
    for size in range(top + 1):
        for subset in combinations(eligible, size):
            if prefilter is not None and not prefilter(parent, subset):
                continue
            yield Graph(h + 1, list(parent.edges) + [(v, h) for v in subset])


def augmented_classes(
    n: int,
    *,
    max_degree: int | None = None,
    edge_limit: int | None = None,
    keep: Callable[[Graph], bool] | None = None,
    prefilter: Callable[[Graph, tuple[int, ...]], bool] | None = None,
    min_degree_target: int = 0,
) -> dict[int, list[Graph]]:
    """Isomorphism classes on 1..n vertices surviving the hereditary prunes.

    ``keep`` must be hereditary. ``min_degree_target`` enables the
    deficiency prune: a level-h graph can only reach minimum degree m at
    level n if its total degree deficit is at most (n-h) * max_degree.
    """
    levels: dict[int, list[Graph]] = {}
    start = make_graph(1, [])
    levels[1] = [start] if (keep is None or keep(start)) else []
    for h in range(2, n + 1):
        seen: dict[str, Graph] = {}
        remaining = n - h
        for parent in levels[h - 1]:
            for child in _children(parent, max_degree, prefilter):
                if edge_limit is not None and child.edge_count > edge_limit:
                    continue
                if min_degree_target and max_degree is not None:
                    deficit = sum(
                        max(0, min_degree_target - child.degree(v))
                        for v in range(child.n)
                    )
                    if deficit > remaining * max_degree:
                        continue
                if keep is not None and not keep(child):
                    continue
                key = canonical_form(child)
                if key not in seen:
                    seen[key] = canonical_graph(child)
        levels[h] = [seen[key] for key in sorted(seen)]
    return levels


def enumerate_graphs(
    n: int,
    e: int,
    *,
    connected: bool = False,
    two_connected: bool = False,
    min_degree: int = 0,
    isomorph_reject: bool = False,
    ceiling: int | None = None,
) -> Iterator[Graph]:
    """Stream the graphs with n vertices and e edges matching the filters.

    Labeled mode yields every labeled graph; with ``isomorph_reject`` one
    canonical representative per isomorphism class. Deterministic order in
    both modes. Raises ``CeilingExceeded`` past the configured ceiling.
    """
    limit = ceiling if ceiling is not None else search_ceiling()
    if n > limit:
        raise CeilingExceeded(f"n={n} exceeds the enumeration ceiling {limit}")
    if n < 0 or e < 0 or e > n * (n - 1) // 2:
        return

    def admit(g: Graph) -> bool:
        if min_degree and any(g.degree(v) < min_degree for v in range(g.n)):
            return False
        if connected and not is_connected(g):
            return False
        if two_connected and not is_2_connected(g):
            return False
        return True

    if isomorph_reject:
        # a regular target bounds every intermediate degree
        cap = min_degree if min_degree and n * min_degree == 2 * e else None
        levels = augmented_classes(
            n,
            max_degree=cap,
            edge_limit=e,
            min_degree_target=min_degree if cap else 0,
        )
        for g in levels[n]:
            if g.edge_count == e and admit(g):
                yield g
    else:
        pairs = list(combinations(range(n), 2))
        for chosen in combinations(pairs, e):
            g = Graph(n, chosen)
            if admit(g):
                yield g


def _is_free_child(g: Graph) -> bool:
    """No (1 mod 3)-cycle through the newest vertex (parents are free)."""
    v = g.n - 1
    full = (1 << g.n) - 1
    return _search_root(g.adj, g.adj_bits, v, 1, 3, full) is None


def _mask_has_cycle(adj_bits: tuple[int, ...], keep: int) -> bool:
    """Cycle test on an induced vertex mask: edges > vertices - components."""
    vertices = keep.bit_count()
    edges = 0
    m = keep
    while m:
        low = m & -m
        edges += (adj_bits[low.bit_length() - 1] & keep).bit_count()
        m ^= low
    edges //= 2
    components = 0
    left = keep
    while left:
        components += 1
        start = left & -left
        left &= ~_reach_in_mask(adj_bits, start, keep)
    return edges > vertices - components


def _reach_in_mask(adj_bits: tuple[int, ...], start: int, allowed: int) -> int:
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj_bits[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~reach
        reach |= frontier
    return reach


def _creates_disjoint_pair(g: Graph) -> bool:
    """Some cycle through the newest vertex leaves another cycle disjoint.

    Parents carry no disjoint pair, so any new pair involves the new vertex;
    the complement of each cycle through it only needs a forest test.
    """
    v = g.n - 1
    adj = g.adj
    adj_bits = g.adj_bits
    full = (1 << g.n) - 1
    path = [v]
    visited = 1 << v

    def dfs() -> bool:
        nonlocal visited
        u = path[-1]
        for w in adj[u]:
            if w == v:
                if len(path) >= 3 and path[1] < path[-1]:
                    if _mask_has_cycle(adj_bits, full & ~visited):
                        return True
            elif not visited & (1 << w):
                visited |= 1 << w
                path.append(w)
                if dfs():
                    return True
                path.pop()
                visited &= ~(1 << w)
        return False

    return dfs()


def residue_free_classes(
    max_n: int, *, forbid_two_disjoint_cycles: bool = False
) -> dict[int, list[Graph]]:
    """All isomorphism classes without (1 mod 3)-cycles, up to max_n vertices.

    Freeness is induced-hereditary, so pruning the augmentation keeps the
    enumeration exhaustive while skipping almost the entire graph universe.
    Optionally also excludes graphs containing two disjoint cycles (again
    hereditary).
    """

    def prefilter(parent: Graph, subset: tuple[int, ...]) -> bool:
        # two attachment points with a common neighbour close a 4-cycle,
        # which is a (1 mod 3)-cycle; veto before building the child
        for i, a in enumerate(subset):
            bits_a = parent.adj_bits[a]
            for b in subset[i + 1:]:
                if bits_a & parent.adj_bits[b]:
                    return False
        return True

    def keep(g: Graph) -> bool:
        if g.degree(g.n - 1) >= 2:
            if not _is_free_child(g):
                return False
            if forbid_two_disjoint_cycles and _creates_disjoint_pair(g):
                return False
        return True

    return augmented_classes(max_n, keep=keep, prefilter=prefilter)
