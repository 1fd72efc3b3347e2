"""Small-graph isomorphism via canonical labelings.

Canonical forms are computed by iterative degree/neighbourhood refinement
with backtracking over the coarsest stable partition. Cost grows quickly
with symmetry and order; the intended range is n <= ~16, which covers every
isomorphism query in this package.
"""

from __future__ import annotations

from .graph import Graph
from .io import emit_graph6


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable partition refining ``cells`` (deterministic)."""
    while True:
        index = [0] * g.n
        for ci, cell in enumerate(cells):
            for v in cell:
                index[v] = ci
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[tuple[int, int], ...], list[int]] = {}
            for v in cell:
                counts: dict[int, int] = {}
                for w in g.adj[v]:
                    counts[index[w]] = counts.get(index[w], 0) + 1
                key = tuple(sorted(counts.items()))
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _certificate(g: Graph, order: list[int]) -> tuple[int, ...]:
    """Upper-triangle adjacency bits under ``order`` (prefixes allowed)."""
    bits = []
    for j in range(1, len(order)):
        mask = g.adj_bits[order[j]]
        for i in range(j):
            bits.append((mask >> order[i]) & 1)
    return tuple(bits)


_MAX_AUTOS = 256


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """A relabeling old->new whose certificate is minimal over the search.

    Invariant under any prior relabeling of ``g``, so two graphs are
    isomorphic exactly when their canonically relabeled edge sets agree.
    The search prunes on certificate prefixes and on automorphisms
    discovered from certificate-equal leaves, which tames the symmetric
    cases (forests, vertex-transitive graphs) that otherwise explode.
    """
    n = g.n
    if n == 0:
        return ()
    e = g.edge_count
    if e == 0 or e == n * (n - 1) // 2:
        # empty and complete graphs: every labeling is canonical
        return tuple(range(n))

    best_cert: list[tuple[int, ...]] = []
    best_order: list[list[int]] = []
    autos: list[tuple[int, ...]] = []

    def walk(cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(g, cells)
        p = 0
        while p < len(cells) and len(cells[p]) == 1:
            p += 1
        order = [cells[i][0] for i in range(p)]
        partial = _certificate(g, order)
        if best_cert:
            if partial > best_cert[0][: len(partial)]:
                return
        if p == len(cells):
            if not best_cert or partial < best_cert[0]:
                best_cert[:] = [partial]
                best_order[:] = [order]
            elif partial == best_cert[0] and len(autos) < _MAX_AUTOS:
                # two labelings with one certificate give an automorphism
                perm = [0] * n
                for i, old in enumerate(order):
                    perm[old] = best_order[0][i]
                autos.append(tuple(perm))
                autos.append(tuple(sorted(range(n), key=perm.__getitem__)))
            return
        cell = cells[p]
        done: set[int] = set()
        for v in cell:
            if any(
                perm[v] in done and all(perm[x] == x for x in fixed)
                for perm in autos
            ):
                continue
            branched = (
                cells[:p] + [[v], [w for w in cell if w != v]] + cells[p + 1:]
            )
            walk(branched, fixed + [v])
            done.add(v)

    walk(_initial_cells(g), [])
    inv = [0] * n
    for new, old in enumerate(best_order[0]):
        inv[old] = new
    return tuple(inv)


def _initial_cells(g: Graph) -> list[list[int]]:
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    return [sorted(by_degree[d]) for d in sorted(by_degree)]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> str:
    """Relabeling-invariant canonical label string (graph6 of the canon)."""
    return emit_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for small graphs."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    return canonical_form(g) == canonical_form(h)
