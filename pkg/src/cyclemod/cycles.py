"""Cycle enumeration, girth, and residue-class cycle search with certificates.

Two deliberately separate engines live here: ``enumerate_cycles`` is a
smallest-vertex-rooted simple-cycle enumerator used as the independent
oracle, while ``find_cycle_mod`` is a pruned DFS over simple paths that
proves presence (witness) or absence (completed search) of a cycle in a
residue class. All searches explore neighbours in ascending vertex order,
so every answer is deterministic for a fixed labeling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceeded, FormatError, VertexNotOnCycle
from .graph import Edge, Graph, induced_subgraph


@dataclass(frozen=True)
class ResidueClass:
    """The class of cycle lengths congruent to ell modulo k."""

    ell: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"modulus must be >= 1, got {self.k}")
        if not (0 <= self.ell < self.k):
            raise ValueError(f"residue {self.ell} outside 0..{self.k - 1}")

    @property
    def contains_even(self) -> bool:
        """Whether the arithmetic progression contains an even integer.

        Recorded because the linear-edge-bound phenomenon needs it; detection
        itself is meaningful for every class.
        """
        return self.k % 2 == 1 or self.ell % 2 == 0

    def __str__(self) -> str:
        return f"({self.ell} mod {self.k})"


def as_residue_class(rc: ResidueClass | tuple[int, int]) -> ResidueClass:
    if isinstance(rc, ResidueClass):
        return rc
    ell, k = rc
    return ResidueClass(ell, k)


class OrientedCycle:
    """A simple cycle with a fixed orientation in a host graph.

    Supports arc-length queries: the arc from x to y is the path following
    the orientation, so arc(x, y) + arc(y, x) = length.
    """

    __slots__ = ("graph", "vertices", "_pos")

    def __init__(self, graph: Graph, vertices: tuple[int, ...] | list[int]):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise ValueError("a cycle has at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        for i, u in enumerate(vs):
            if not graph.has_edge(u, vs[(i + 1) % len(vs)]):
                raise ValueError(f"({u}, {vs[(i + 1) % len(vs)]}) is not an edge")
        self.graph = graph
        self.vertices = vs
        self._pos = {v: i for i, v in enumerate(vs)}

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise VertexNotOnCycle(f"vertex {v} not on cycle") from None

    def arc_length(self, x: int, y: int) -> int:
        """Edges on the oriented arc from x to y."""
        return (self.position(y) - self.position(x)) % self.length

    def arc_vertices(self, x: int, y: int) -> tuple[int, ...]:
        """Vertices of the oriented arc from x to y, inclusive of both."""
        i, L = self.position(x), self.length
        steps = self.arc_length(x, y)
        return tuple(self.vertices[(i + s) % L] for s in range(steps + 1))

    def successor(self, x: int) -> int:
        return self.vertices[(self.position(x) + 1) % self.length]

    def predecessor(self, x: int) -> int:
        return self.vertices[(self.position(x) - 1) % self.length]

    def reverse(self) -> "OrientedCycle":
        return OrientedCycle(self.graph, (self.vertices[0],) + self.vertices[:0:-1])

    def __repr__(self) -> str:
        return f"OrientedCycle({','.join(map(str, self.vertices))})"


@dataclass(frozen=True)
class CycleWitness:
    """Checkable certificate that a cycle of length ell mod k exists."""

    vertices: tuple[int, ...]
    ell: int
    k: int

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PathWitness:
    """A simple path recorded as its vertex sequence; length counts edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def terminus(self) -> int:
        return self.vertices[-1]

    def reverse(self) -> "PathWitness":
        return PathWitness(self.vertices[::-1])


def is_valid_path(g: Graph, p: PathWitness) -> bool:
    vs = p.vertices
    if len(vs) == 0 or len(set(vs)) != len(vs):
        return False
    if any(not (0 <= v < g.n) for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


def check_witness(g: Graph, w: CycleWitness) -> bool:
    """True iff the sequence is a simple cycle of g with the claimed residue."""
    if w.k < 1 or not (0 <= w.ell < w.k):
        return False
    if any(not (0 <= v < g.n) for v in w.vertices):
        return False
    try:
        cycle = OrientedCycle(g, w.vertices)
    except ValueError:
        return False
    return cycle.length % w.k == w.ell


def format_witness(w: CycleWitness) -> str:
    """One-line text form: ``cycle k=<k> ell=<ell> v=<v0,v1,...>``."""
    return f"cycle k={w.k} ell={w.ell} v={','.join(map(str, w.vertices))}"


def parse_witness(line: str) -> CycleWitness:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "cycle":
        raise FormatError(f"malformed witness line: {line!r}")
    fields = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        fields[key] = value
    try:
        k = int(fields["k"])
        ell = int(fields["ell"])
        vertices = tuple(int(tok) for tok in fields["v"].split(","))
    except (KeyError, ValueError):
        raise FormatError(f"malformed witness line: {line!r}") from None
    return CycleWitness(vertices, ell, k)


def _reach_mask(adj_bits, start_bit: int, allowed: int) -> int:
    """Vertices reachable from ``start_bit`` staying inside ``allowed``."""
    reach = start_bit & allowed
    frontier = reach
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj_bits[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~reach
        reach |= frontier
    return reach


def enumerate_cycles(
    g: Graph, max_count: int | None = None
) -> Iterator[OrientedCycle]:
    """Every simple cycle exactly once, in deterministic order.

    Cycles are rooted at their smallest vertex; rotation and reflection are
    fixed by emitting the orientation whose second vertex is smaller than
    its last. Raises ``BudgetExceeded`` on discovering a cycle beyond
    ``max_count`` -- truncation is never silent.
    """
    adj = g.adj
    adj_bits = g.adj_bits
    count = 0

    for root in range(g.n):
        allowed_global = ((1 << g.n) - 1) & ~((1 << root) - 1)
        root_bit = 1 << root
        path = [root]
        visited = root_bit

        def extend() -> Iterator[list[int]]:
            nonlocal visited
            u = path[-1]
            depth = len(path)
            for w in adj[u]:
                if w == root:
                    if depth >= 3 and path[1] < path[-1]:
                        yield path
                elif w > root and not visited & (1 << w):
                    wbit = 1 << w
                    # only extend where the root stays reachable
                    free = (allowed_global & ~visited & ~wbit) | root_bit
                    if not _reach_mask(adj_bits, wbit, free | wbit) & root_bit:
                        continue
                    path.append(w)
                    visited |= wbit
                    yield from extend()
                    path.pop()
                    visited &= ~wbit

        for found in extend():
            if max_count is not None and count == max_count:
                raise BudgetExceeded(
                    f"cycle stream truncated at max_count={max_count}"
                )
            count += 1
            yield OrientedCycle(g, tuple(found))


def girth(g: Graph) -> tuple[int, OrientedCycle] | None:
    """Length of a shortest cycle with one witness, or None when acyclic."""
    best: tuple[int, list[int]] | None = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if best is not None and cand >= best[0]:
                        continue
                    pu = _walk_up(u, parent)
                    pw = _walk_up(w, parent)
                    if set(pu) & set(pw) != {s}:
                        continue
                    # s..u ascending, then w descending back towards s
                    best = (cand, pu[::-1] + pw[:-1])
        if best is not None and best[0] == 3:
            break
    if best is None:
        return None
    return best[0], OrientedCycle(g, tuple(best[1]))


def _walk_up(v: int, parent: dict[int, int]) -> list[int]:
    out = [v]
    while parent[v] != -1:
        v = parent[v]
        out.append(v)
    return out


def _walk_residues_raw(
    adj: tuple[tuple[int, ...], ...], n: int, root: int, k: int, allowed: int
) -> list[int]:
    """Residues (bitmask over Z_k) of walk lengths root->v inside allowed.

    Walks may repeat vertices, so the sets overapproximate simple-path
    lengths; that is what makes them a sound pruning table.
    """
    masks = [0] * n
    masks[root] = 1
    queue = deque([(root, 0)])
    seen = {(root, 0)}
    while queue:
        v, r = queue.popleft()
        nr = (r + 1) % k
        for w in adj[v]:
            if allowed >> w & 1 and (w, nr) not in seen:
                seen.add((w, nr))
                masks[w] |= 1 << nr
                queue.append((w, nr))
    return masks


def _search_root(
    adj: tuple[tuple[int, ...], ...],
    adj_bits: tuple[int, ...],
    root: int,
    ell: int,
    k: int,
    allowed: int,
) -> list[int] | None:
    """First cycle through ``root`` inside ``allowed`` with length ell mod k.

    DFS over simple paths in ascending neighbour order, pruned by (a) the
    walk-residue table of the residue-layered product graph, (b) root
    reachability through unvisited vertices, and (c) the remaining vertex
    budget. The product-graph table only ever prunes; exhaustion is
    concluded solely from the completed DFS.
    """
    root_bit = 1 << root
    if adj_bits[root] & allowed & ~root_bit == 0:
        return None
    n = len(adj)
    wres = _walk_residues_raw(adj, n, root, k, allowed)
    # every cycle is a closed walk, so a root with no closed walk of the
    # target residue cannot carry a witness (the empty walk gives 0)
    if not wres[root] >> ell & 1:
        return None
    path = [root]
    visited = root_bit

    def dfs() -> list[int] | None:
        nonlocal visited
        u = path[-1]
        m = len(path) - 1
        close_ok = m >= 2 and (m + 1) % k == ell
        for w in adj[u]:
            if w == root:
                if close_ok:
                    return list(path)
                continue
            wbit = 1 << w
            if not allowed & wbit or visited & wbit:
                continue
            # prune (a): some closing walk residue must fit the target
            rw = wres[w]
            if not any(rw >> r & 1 and (m + 1 + r) % k == ell for r in range(k)):
                continue
            # prune (b): the root must stay reachable past this choice
            free = (allowed & ~visited & ~wbit) | root_bit
            reach = _reach_mask(adj_bits, wbit, free | wbit)
            if not reach & root_bit:
                continue
            # prune (c): enough reachable budget for some fitting length
            budget = (reach & ~wbit & ~root_bit).bit_count()
            if not any(
                (m + 2 + extra) % k == ell
                for extra in range(min(budget, k - 1) + 1)
            ):
                continue
            path.append(w)
            visited |= wbit
            hit = dfs()
            if hit is not None:
                return hit
            path.pop()
            visited &= ~wbit
        return None

    return dfs()


def find_cycle_mod_raw(
    adj: tuple[tuple[int, ...], ...], adj_bits: tuple[int, ...], ell: int, k: int
) -> list[int] | None:
    """Graph-object-free core of ``find_cycle_mod`` (k >= 2)."""
    n = len(adj)
    full = (1 << n) - 1
    for root in range(n):
        allowed = full & ~((1 << root) - 1)
        found = _search_root(adj, adj_bits, root, ell, k, allowed)
        if found is not None:
            return found
    return None


def find_cycle_mod(
    g: Graph, rc: ResidueClass | tuple[int, int]
) -> CycleWitness | None:
    """A witness cycle with length in the residue class, or None.

    None means the search completed and proved no such cycle exists. The
    search roots a pruned DFS at each vertex in turn, restricted to larger
    vertices, so the witness is deterministic for a fixed labeling.
    """
    rc = as_residue_class(rc)
    ell, k = rc.ell, rc.k
    if g.n < 3:
        return None
    if k == 1:
        res = girth(g)
        if res is None:
            return None
        return CycleWitness(res[1].vertices, 0, 1)
    found = find_cycle_mod_raw(g.adj, g.adj_bits, ell, k)
    if found is None:
        return None
    return CycleWitness(tuple(found), ell, k)


def residue_spectrum(g: Graph, k: int) -> set[int]:
    """Residues modulo k realized by cycle lengths of g."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    return {
        ell for ell in range(k) if find_cycle_mod(g, ResidueClass(ell, k)) is not None
    }


def spectrum_by_enumeration(g: Graph, k: int) -> set[int]:
    """Independent spectrum computation by complete cycle enumeration."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    return {c.length % k for c in enumerate_cycles(g)}


def is_mod_diagonal(c: OrientedCycle, x: int, y: int) -> bool:
    """Diagonal pair modulo 3: both arcs between x and y agree mod 3."""
    if x == y:
        raise ValueError("mod-diagonal queries need two distinct vertices")
    a = c.arc_length(x, y)
    return a % 3 == (c.length - a) % 3


@dataclass(frozen=True)
class CycleBridge:
    """A bridge of a cycle: a chord, or an anchored component of G - C.

    ``anchors`` is N_C(H), the cycle vertices the bridge attaches to.
    """

    kind: str  # "chord" | "component"
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    anchors: tuple[int, ...]


def bridges_of_cycle(g: Graph, c: OrientedCycle) -> list[CycleBridge]:
    """All bridges of c; every edge and vertex outside c joins exactly one."""
    on_cycle = set(c.vertices)
    cycle_edges = {
        tuple(sorted((c.vertices[i], c.vertices[(i + 1) % c.length])))
        for i in range(c.length)
    }
    out: list[CycleBridge] = []
    for e in g.edges:
        if e[0] in on_cycle and e[1] in on_cycle and e not in cycle_edges:
            out.append(CycleBridge("chord", (), (e,), e))

    outside = [v for v in range(g.n) if v not in on_cycle]
    seen: set[int] = set()
    for start in outside:
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in on_cycle and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        edges = tuple(
            e for e in g.edges if e[0] in comp or e[1] in comp
        )
        anchors = tuple(
            sorted({a for e in edges for a in e if a in on_cycle})
        )
        out.append(CycleBridge("component", tuple(sorted(comp)), edges, anchors))
    out.sort(key=lambda b: (b.kind, b.vertices, b.edges))
    return out


def two_disjoint_cycles(
    g: Graph,
) -> tuple[OrientedCycle, OrientedCycle] | None:
    """A vertex-disjoint cycle pair, or None after a completed pair scan."""
    for cyc in enumerate_cycles(g):
        members = set(cyc.vertices)
        rest = [v for v in range(g.n) if v not in members]
        if len(rest) < 3:
            continue
        sub, back = induced_subgraph(g, rest)
        res = girth(sub)
        if res is not None:
            other = OrientedCycle(g, tuple(back[v] for v in res[1].vertices))
            return cyc, other
    return None
