"""Block structure and the connectivity predicates the theorems quantify over."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DisconnectedInput
from .graph import Edge, Graph, vertex_set


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and their bipartite incidence.

    A block is an isolated vertex, a single edge, or a maximal 2-connected
    subgraph; every edge lies in exactly one block and two blocks share at
    most one vertex, necessarily a cut vertex. Blocks are ordered by their
    smallest contained vertex.
    """

    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[Edge, ...], ...]
    cut_vertices: tuple[int, ...]
    block_cut_tree: tuple[tuple[int, int], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan lowpoint decomposition (iterative, deterministic)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[Edge] = []
    raw_blocks: list[list[Edge]] = []
    cut: set[int] = set()
    root_children = [0] * n

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            raw_blocks.append([])  # isolated vertex block, patched below
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            u, parent, i = stack[-1]
            advanced = False
            while i < len(g.adj[u]):
                v = g.adj[u][i]
                i += 1
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if parent == -1:
                        root_children[u] += 1
                    stack[-1] = (u, parent, i)
                    stack.append((v, u, 0))
                    advanced = True
                    break
                if v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                block: list[Edge] = []
                while edge_stack:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == (p, u):
                        break
                raw_blocks.append(block)
                if stack[-1][1] != -1:
                    cut.add(p)
        if root_children[root] >= 2:
            cut.add(root)

    blocks: list[tuple[int, ...]] = []
    block_edges: list[tuple[Edge, ...]] = []
    iso_iter = iter(v for v in range(n) if g.degree(v) == 0)
    for block in raw_blocks:
        if not block:
            blocks.append((next(iso_iter),))
            block_edges.append(())
        else:
            verts = sorted({w for e in block for w in e})
            blocks.append(tuple(verts))
            block_edges.append(tuple(sorted(tuple(sorted(e)) for e in block)))
    order = sorted(range(len(blocks)), key=lambda i: blocks[i])
    blocks = [blocks[i] for i in order]
    block_edges = [block_edges[i] for i in order]
    cut_vertices = tuple(sorted(cut))
    tree = tuple(
        (bi, v) for bi, verts in enumerate(blocks) for v in verts if v in cut
    )
    return BlockDecomposition(tuple(blocks), tuple(block_edges), cut_vertices, tree)


def is_2_connected(g: Graph) -> bool:
    """True iff the graph has order >= 3, is connected and has no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return not block_decomposition(g).cut_vertices


def find_essential_cut(g: Graph) -> tuple[int, ...] | None:
    """Smallest essential vertex cut of size <= 2, or None.

    A cut is essential when its removal leaves at least two nontrivial
    components (components with >= 2 vertices). Raises ``DisconnectedInput``
    on disconnected graphs.
    """
    if not is_connected(g):
        raise DisconnectedInput("essential connectivity requires a connected graph")

    def leaves_two_nontrivial(removed: tuple[int, ...]) -> bool:
        keep = [v for v in range(g.n) if v not in removed]
        seen = {v: False for v in keep}
        nontrivial = 0
        for s in keep:
            if seen[s]:
                continue
            size = 1
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in g.adj[u]:
                    if w in seen and not seen[w]:
                        seen[w] = True
                        size += 1
                        queue.append(w)
            if size >= 2:
                nontrivial += 1
                if nontrivial >= 2:
                    return True
        return False

    for v in range(g.n):
        if leaves_two_nontrivial((v,)):
            return (v,)
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if leaves_two_nontrivial((v, w)):
                return (v, w)
    return None


def is_essentially_3_connected(g: Graph) -> bool:
    """No essential vertex cut of size at most 2."""
    return find_essential_cut(g) is None


@dataclass(frozen=True)
class Insufficient:
    """Menger certificate: every S-T path meets this vertex set (< k)."""

    separator: tuple[int, ...]


def disjoint_paths(
    g: Graph, s: Iterable[int], t: Iterable[int], k: int
) -> list[tuple[int, ...]] | Insufficient:
    """k internally-disjoint S->T paths, or an ``Insufficient`` separator.

    Paths have their origin in S, terminus in T and all internal vertices
    outside S and T; they share no vertex outside S and T, though several
    may leave the same origin or reach the same terminus. A vertex lying in
    both S and T is consumed by its trivial one-vertex path.

    Computed by unit-vertex-capacity augmenting paths on the split digraph;
    when fewer than k paths exist the min-cut supplies a separating vertex
    set of size < k whose removal leaves no S->T path.
    """
    s_set = set(vertex_set(g, s))
    t_set = set(vertex_set(g, t))
    shared = sorted(s_set & t_set)
    paths: list[tuple[int, ...]] = [(v,) for v in shared]
    if len(paths) >= k:
        return paths[:k]
    need = k - len(paths)

    blocked = set(shared)
    s_only = sorted(s_set - t_set)
    t_only = sorted(t_set - s_set)

    # split digraph: in(v)=2v, out(v)=2v+1, source=2n, sink=2n+1.
    # Internal vertices and edges carry capacity 1; S/T endpoints are
    # uncapacitated so paths may fan out of them.
    n = g.n
    source, sink = 2 * n, 2 * n + 1
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    orig: dict[tuple[int, int], int] = {}
    arcs: dict[int, list[int]] = {source: [], sink: []}

    def add_arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            arcs.setdefault(a, []).append(b)
            arcs.setdefault(b, []).append(a)
            cap[(a, b)] = 0
            cap[(b, a)] = 0
        cap[(a, b)] += c
        orig[(a, b)] = orig.get((a, b), 0) + c

    for v in range(n):
        if v not in blocked:
            unit = 1 if v not in s_set and v not in t_set else big
            add_arc(2 * v, 2 * v + 1, unit)
    for u, v in g.edges:
        if u in blocked or v in blocked:
            continue
        # S vertices admit no incoming arcs, T vertices no outgoing arcs
        if v not in s_set and u not in t_set:
            add_arc(2 * u + 1, 2 * v, 1)
        if u not in s_set and v not in t_set:
            add_arc(2 * v + 1, 2 * u, 1)
    for v in s_only:
        add_arc(source, 2 * v, big)
    for v in t_only:
        add_arc(2 * v + 1, sink, big)

    flow = 0
    while flow < need:
        # BFS over residual arcs, ascending neighbour order for determinism
        prev: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in sorted(arcs.get(a, ())):
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    if flow < need:
        reach = {source}
        queue = deque([source])
        while queue:
            a = queue.popleft()
            for b in arcs.get(a, ()):
                if b not in reach and cap.get((a, b), 0) > 0:
                    reach.add(b)
                    queue.append(b)
        # every crossing arc has unit capacity: an internal split arc names
        # its vertex, a crossing edge arc names the edge's head
        separator = set(shared)
        for (a, b), c in cap.items():
            if c == 0 and orig.get((a, b), 0) > 0 and a in reach and b not in reach:
                if a % 2 == 0 and b == a + 1:
                    separator.add(a // 2)
                elif b < 2 * n:
                    separator.add(b // 2)
        return Insufficient(tuple(sorted(separator)))

    # decompose flow into paths by walking carrying arcs, sources ascending
    net = {
        arc: orig.get(arc, 0) - c for arc, c in cap.items() if orig.get(arc, 0) > c
    }
    for v in s_only:
        for _ in range(net.get((source, 2 * v), 0)):
            path = [v]
            node = 2 * v + 1
            while True:
                if net.get((node, sink), 0) > 0:
                    net[(node, sink)] -= 1
                    break
                nxt = None
                for b in sorted(arcs.get(node, ())):
                    if b < 2 * n and b % 2 == 0 and net.get((node, b), 0) > 0:
                        nxt = b
                        break
                assert nxt is not None, "flow conservation violated"
                net[(node, nxt)] -= 1
                net[(nxt, nxt + 1)] = net.get((nxt, nxt + 1), 0) - 1
                path.append(nxt // 2)
                node = nxt + 1
            paths.append(tuple(path))
    return paths[:k]
