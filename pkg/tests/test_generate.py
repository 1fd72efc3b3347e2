from itertools import combinations

import pytest

from cyclemod import (
    canonical_form,
    enumerate_graphs,
    is_connected,
    make_graph,
    residue_free_classes,
)
from cyclemod.errors import CeilingExceeded


def test_small_class_counts():
    assert len(list(enumerate_graphs(4, 3, connected=True, isomorph_reject=True))) == 2
    assert len(list(enumerate_graphs(3, 3, isomorph_reject=True))) == 1
    assert len(list(enumerate_graphs(4, 3, isomorph_reject=True))) == 3


def test_labeled_mode_counts():
    graphs = list(enumerate_graphs(4, 3))
    assert len(graphs) == 20  # C(6,3)
    assert len([g for g in graphs if is_connected(g)]) == 16


def test_isomorph_reject_agrees_with_labeled_dedup():
    for n in range(1, 6):
        for e in range(0, n * (n - 1) // 2 + 1):
            via_generator = {
                canonical_form(g)
                for g in enumerate_graphs(n, e, isomorph_reject=True)
            }
            via_labeled = {
                canonical_form(g) for g in enumerate_graphs(n, e)
            }
            assert via_generator == via_labeled, (n, e)


def test_cubic_catalog_counts():
    # cross-checked against the labeled enumeration below for n <= 6
    assert len(list(enumerate_graphs(4, 6, min_degree=3, isomorph_reject=True))) == 1
    assert len(list(enumerate_graphs(6, 9, min_degree=3, isomorph_reject=True))) == 2
    catalog8 = list(enumerate_graphs(8, 12, min_degree=3, isomorph_reject=True))
    assert len(catalog8) == 6
    assert sum(1 for g in catalog8 if is_connected(g)) == 5


def test_cubic_catalog_matches_labeled_enumeration_n6():
    labeled = {
        canonical_form(g)
        for g in enumerate_graphs(6, 9, min_degree=3)
    }
    generated = {
        canonical_form(g)
        for g in enumerate_graphs(6, 9, min_degree=3, isomorph_reject=True)
    }
    assert labeled == generated
    assert len(labeled) == 2


def test_ceiling_enforced():
    with pytest.raises(CeilingExceeded):
        list(enumerate_graphs(11, 10))
    # explicit ceiling overrides the default
    assert len(list(enumerate_graphs(11, 1, ceiling=11))) == 55


def test_free_universe_counts_and_edge_maxima():
    # frozen from the generator itself; the edge maxima independently
    # reproduce the bound sequence 4, 6, 7, 9 for n = 4..7
    free = residue_free_classes(7)
    assert {n: len(v) for n, v in free.items()} == {
        1: 1, 2: 2, 3: 4, 4: 8, 5: 18, 6: 44, 7: 113,
    }
    maxima = {n: max(g.edge_count for g in v) for n, v in free.items() if n >= 3}
    assert maxima == {3: 3, 4: 4, 5: 6, 6: 7, 7: 9}


def test_free_universe_matches_brute_force_n5():
    free5 = {canonical_form(g) for g in residue_free_classes(5)[5]}
    pairs = list(combinations(range(5), 2))
    brute = set()
    for mask in range(1 << 10):
        g = make_graph(5, [pairs[i] for i in range(10) if mask >> i & 1])
        from cyclemod import find_cycle_mod

        if find_cycle_mod(g, (1, 3)) is None:
            brute.add(canonical_form(g))
    assert free5 == brute


def test_no_disjoint_universe_is_a_subset():
    free = residue_free_classes(6)
    restricted = residue_free_classes(6, forbid_two_disjoint_cycles=True)
    assert {n: len(v) for n, v in restricted.items()} == {
        1: 1, 2: 2, 3: 4, 4: 8, 5: 18, 6: 42,
    }
    big = {canonical_form(g) for g in free[6]}
    assert {canonical_form(g) for g in restricted[6]} <= big
