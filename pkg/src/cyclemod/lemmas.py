"""Executable forms of the constructive lemmas.

Each verifier checks its hypotheses explicitly (raising
``PreconditionFailed`` with the violated clause) and then produces the
object the lemma promises, typically a certified (1 mod 3)-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import connected_components, is_2_connected
from .constructions import l_graph
from .cycles import (
    CycleWitness,
    OrientedCycle,
    PathWitness,
    check_witness,
    find_cycle_mod,
    girth,
    is_mod_diagonal,
    is_valid_path,
    two_disjoint_cycles,
)
from .errors import OrderViolation, PreconditionFailed
from .graph import Graph, induced_subgraph, rho
from .iso import canonical_form


@dataclass(frozen=True)
class Lemma1Report:
    """Outcome of the two arc-arithmetic assertions on an ordered triple.

    Assertion 1: x,y are mod-diagonal iff arc(x,y) = -|C| mod 3.
    Assertion 2: if x is mod-diagonal with both y and z, arc(y,z) = 0 mod 3;
    ``assertion2_holds`` is None when that premise is not met.
    """

    assertion1_holds: bool
    assertion2_applies: bool
    assertion2_holds: bool | None


def lemma1_checks(c: OrientedCycle, x: int, y: int, z: int) -> Lemma1Report:
    """Evaluate both diagonal-pair arithmetic assertions on x, y, z."""
    if len({x, y, z}) != 3:
        raise OrderViolation("x, y, z must be three distinct vertices")
    ay = c.arc_length(x, y)
    az = c.arc_length(x, z)
    if not 0 < ay < az:
        raise OrderViolation("x, y, z must appear in this order along the cycle")
    a1 = is_mod_diagonal(c, x, y) == (ay % 3 == (-c.length) % 3)
    applies = is_mod_diagonal(c, x, y) and is_mod_diagonal(c, x, z)
    a2 = c.arc_length(y, z) % 3 == 0 if applies else None
    return Lemma1Report(a1, applies, a2)


def _normalize_endpoints(
    p: PathWitness, origin: int, terminus: int
) -> PathWitness | None:
    if p.origin == origin and p.terminus == terminus:
        return p
    if p.origin == terminus and p.terminus == origin:
        return p.reverse()
    return None


def verify_three_path_fan(
    g: Graph, p: PathWitness, q1: PathWitness, q2: PathWitness, q3: PathWitness
) -> CycleWitness:
    """Produce the guaranteed (1 mod 3)-cycle from a three-path fan.

    Hypotheses: the four paths share endpoints, p is internally disjoint
    from each q_i, and the q_i have pairwise distinct lengths modulo 3.
    The three cycles p+q_i then realize three distinct residues, so one of
    them is the witness.
    """
    for name, path in (("P", p), ("Q1", q1), ("Q2", q2), ("Q3", q3)):
        if not is_valid_path(g, path):
            raise PreconditionFailed(f"{name} is not a path of the graph")
    x, y = p.origin, p.terminus
    if x == y:
        raise PreconditionFailed("P must join two distinct endpoints")
    qs = []
    for name, q in (("Q1", q1), ("Q2", q2), ("Q3", q3)):
        fixed = _normalize_endpoints(q, x, y)
        if fixed is None:
            raise PreconditionFailed(f"{name} does not share P's endpoints")
        if set(p.vertices) & set(fixed.vertices) != {x, y}:
            raise PreconditionFailed(f"P and {name} are not internally disjoint")
        qs.append(fixed)
    if len({q.length % 3 for q in qs}) != 3:
        raise PreconditionFailed("Q lengths are not pairwise distinct mod 3")

    for q in qs:
        if (p.length + q.length) % 3 == 1:
            verts = p.vertices + tuple(reversed(q.vertices[1:-1]))
            witness = CycleWitness(verts, 1, 3)
            if not check_witness(g, witness):
                raise RuntimeError("fan produced an invalid witness")
            return witness
    raise RuntimeError("three distinct residues missed 1 mod 3")  # unreachable


def _arc_options(c: OrientedCycle, a: int, b: int) -> list[tuple[int, ...]]:
    """Both a->b paths along the cycle: with and against the orientation."""
    return [c.arc_vertices(a, b), tuple(reversed(c.arc_vertices(b, a)))]


def verify_clashing_configuration(
    g: Graph,
    c1: OrientedCycle,
    c2: OrientedCycle,
    p1: PathWitness,
    p2: PathWitness,
) -> CycleWitness:
    """Extract the (1 mod 3)-cycle forced by two clashing connector paths.

    Hypotheses: c1 and c2 disjoint, p1 and p2 disjoint paths from c1 to c2
    with internal vertices off both cycles, whose endpoints form
    mod-non-diagonal pairs on both cycles. The two arc choices on each
    cycle give at most four assembled cycles covering three consecutive
    residues, so one is a (1 mod 3)-cycle.
    """
    if set(c1.vertices) & set(c2.vertices):
        raise PreconditionFailed("C1 and C2 share a vertex")
    paths = []
    for name, p in (("P1", p1), ("P2", p2)):
        if not is_valid_path(g, p):
            raise PreconditionFailed(f"{name} is not a path of the graph")
        ends_in_c1 = (p.origin in c1) + (p.terminus in c1)
        ends_in_c2 = (p.origin in c2) + (p.terminus in c2)
        if ends_in_c1 != 1 or ends_in_c2 != 1:
            raise PreconditionFailed(f"{name} does not run from C1 to C2")
        fixed = p if p.origin in c1 else p.reverse()
        if any(v in c1 or v in c2 for v in fixed.vertices[1:-1]):
            raise PreconditionFailed(f"{name} has an internal vertex on a cycle")
        paths.append(fixed)
    if set(p1.vertices) & set(p2.vertices):
        raise PreconditionFailed("P1 and P2 share a vertex")
    q1, q2 = paths
    x1, y1 = q1.origin, q1.terminus
    x2, y2 = q2.origin, q2.terminus
    if is_mod_diagonal(c1, x1, x2):
        raise PreconditionFailed("C1 pair mod-diagonal")
    if is_mod_diagonal(c2, y1, y2):
        raise PreconditionFailed("C2 pair mod-diagonal")

    for arc2 in _arc_options(c2, y1, y2):
        for arc1 in _arc_options(c1, x2, x1):
            length = q1.length + q2.length + len(arc1) - 1 + len(arc2) - 1
            if length % 3 != 1:
                continue
            verts = (
                q1.vertices
                + arc2[1:]
                + tuple(reversed(q2.vertices))[1:]
                + arc1[1:-1]
            )
            witness = CycleWitness(verts, 1, 3)
            if not check_witness(g, witness):
                raise RuntimeError("clashing configuration produced an invalid witness")
            return witness
    raise RuntimeError("arc combinations missed 1 mod 3")  # unreachable


def two_paths_distinct_mod3(
    g: Graph, x: int, y: int
) -> tuple[PathWitness, PathWitness] | None:
    """Two (x,y)-paths with different lengths mod 3, or None.

    None means the complete search of simple (x,y)-paths realized at most
    one length residue. Under the hypotheses of the path-pair lemma
    (G+xy 2-connected, N_2 independence off {x,y}, no 4-cycles, n >= 4)
    the answer is never None.
    """
    if x == y:
        raise ValueError("endpoints must be distinct")
    first: PathWitness | None = None
    path = [x]
    visited = {x}

    def dfs() -> tuple[PathWitness, PathWitness] | None:
        nonlocal first
        u = path[-1]
        for w in g.adj[u]:
            if w == y:
                found = PathWitness(tuple(path) + (y,))
                if first is None:
                    first = found
                elif found.length % 3 != first.length % 3:
                    return first, found
                continue
            if w in visited:
                continue
            visited.add(w)
            path.append(w)
            hit = dfs()
            if hit is not None:
                return hit
            path.pop()
            visited.remove(w)
        return None

    return dfs()


L1, L2, L3 = "L1", "L2", "L3"
CLASSIFIED = "classified"
NOT_APPLICABLE = "not_applicable"
COUNTEREXAMPLE = "counterexample"

_l_forms: dict[str, str] = {}


def _l_graph_forms() -> dict[str, str]:
    if not _l_forms:
        for which in (1, 2, 3):
            _l_forms[canonical_form(l_graph(which))] = f"L{which}"
    return _l_forms


@dataclass(frozen=True)
class L123Result:
    """Outcome of the sparse two-cycle-free classification.

    ``parts`` maps each component of G - C (C a shortest cycle) to the
    exceptional graph its closed neighbourhood with C matches. A
    counterexample status would refute the classification and should never
    occur.
    """

    status: str
    failed_clause: str | None = None
    girth: int | None = None
    parts: tuple[tuple[tuple[int, ...], str], ...] = ()
    detail: str | None = None


def classify_L123_instance(g: Graph) -> L123Result:
    """Check the classification hypotheses and classify each component.

    Hypotheses: 2-connected; no (1 mod 3)-cycle; no two disjoint cycles;
    rho(U) > floor(3|U|/2) for every nonempty U inside every component of
    G - C. When they hold, the girth must be 5 and every component united
    with C must be isomorphic to L1, L2 or L3.
    """
    if not is_2_connected(g):
        return L123Result(NOT_APPLICABLE, failed_clause="not 2-connected")
    if find_cycle_mod(g, (1, 3)) is not None:
        return L123Result(NOT_APPLICABLE, failed_clause="contains a (1 mod 3)-cycle")
    if two_disjoint_cycles(g) is not None:
        return L123Result(NOT_APPLICABLE, failed_clause="contains two disjoint cycles")
    gr = girth(g)
    assert gr is not None  # 2-connected graphs of order >= 3 have cycles
    length, cycle = gr
    members = set(cycle.vertices)
    rest = [v for v in range(g.n) if v not in members]
    if not rest:
        return L123Result(
            NOT_APPLICABLE, failed_clause="no component off the shortest cycle"
        )
    sub, back = induced_subgraph(g, rest)
    comps = [
        tuple(back[v] for v in comp) for comp in connected_components(sub)
    ]
    for comp in comps:
        for size in range(1, len(comp) + 1):
            for u in combinations(comp, size):
                if rho(g, u) <= 3 * size // 2:
                    return L123Result(
                        NOT_APPLICABLE,
                        failed_clause=f"rho({list(u)}) = {rho(g, u)} fails the bound",
                    )

    if length != 5:
        return L123Result(
            COUNTEREXAMPLE,
            girth=length,
            detail=f"hypotheses hold but the shortest cycle has length {length}",
        )
    forms = _l_graph_forms()
    parts = []
    for comp in comps:
        piece, _ = induced_subgraph(g, set(comp) | members)
        label = forms.get(canonical_form(piece))
        if label is None:
            return L123Result(
                COUNTEREXAMPLE,
                girth=length,
                detail=f"component {comp} with C matches no exceptional graph",
            )
        parts.append((comp, label))
    return L123Result(CLASSIFIED, girth=length, parts=tuple(parts))
