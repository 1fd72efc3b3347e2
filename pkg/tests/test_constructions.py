import pytest

from cyclemod import (
    block_chain,
    block_decomposition,
    canonical_form,
    complete,
    complete_bipartite,
    degree_stats,
    emit_graph6,
    enumerate_cycles,
    extremal_family,
    find_cycle_mod,
    girth,
    is_isomorphic,
    l_graph,
    make_graph,
    petersen,
    residue_spectrum,
    rho,
    spectrum_by_enumeration,
    triangle,
    two_disjoint_cycles,
)
from cyclemod.errors import EmptyList


def test_petersen_fixed_labeling():
    g = petersen()
    assert g.n == 10 and g.edge_count == 15
    assert degree_stats(g).degree_sequence == (3,) * 10
    assert girth(g)[0] == 5
    assert find_cycle_mod(g, (1, 3)) is None
    assert (0, 5) in g.edges and (5, 7) in g.edges


def test_constructions_are_deterministic():
    assert emit_graph6(petersen()) == emit_graph6(petersen())
    assert emit_graph6(petersen()) == "IheA@GUAo"
    assert emit_graph6(l_graph(2)) == emit_graph6(l_graph(2))
    assert emit_graph6(extremal_family(13)[0]) == emit_graph6(extremal_family(13)[0])


def test_complete_and_bipartite_spectra():
    assert residue_spectrum(complete_bipartite(2, 6), 3) == {1}
    assert 2 not in residue_spectrum(complete_bipartite(3, 5), 3)
    assert 2 not in residue_spectrum(complete(5), 4)
    assert spectrum_by_enumeration(complete(4), 3) == {0, 1}


def test_l_graph_shapes():
    expectations = {1: (8, 10, 5), 2: (9, 12, 7), 3: (10, 13, 8)}
    for which, (n, e, tree_rho) in expectations.items():
        g = l_graph(which)
        assert (g.n, g.edge_count) == (n, e)
        assert rho(g, range(5, g.n)) == tree_rho
        assert girth(g)[0] == 5
        assert find_cycle_mod(g, (1, 3)) is None
        assert two_disjoint_cycles(g) is None


def test_l_graphs_pairwise_distinct():
    forms = {canonical_form(l_graph(w)) for w in (1, 2, 3)}
    assert len(forms) == 3
    with pytest.raises(ValueError):
        l_graph(4)


def test_extremal_family_small_cases():
    g1, d1 = extremal_family(1)
    assert g1.n == 1 and g1.edge_count == 0
    g4, d4 = extremal_family(4)
    assert g4.edge_count == 4
    assert (d4.q, d4.q_prime, d4.r_prime) == (0, 1, 1)
    g10, d10 = extremal_family(10)
    assert is_isomorphic(g10, petersen())
    assert g10.edge_count == 15


def test_extremal_family_n19():
    g, decomp = extremal_family(19)
    assert g.edge_count == 30 and decomp.q == 2
    assert find_cycle_mod(g, (1, 3)) is None


def test_block_chain_arithmetic():
    g = block_chain([triangle(), triangle()])
    assert (g.n, g.edge_count) == (5, 6)
    g = block_chain([petersen(), make_graph(2, [(0, 1)])])
    assert (g.n, g.edge_count) == (11, 16)
    with pytest.raises(EmptyList):
        block_chain([])
    with pytest.raises(ValueError):
        block_chain([make_graph(2, [])])  # disconnected block


def test_block_chain_decomposition_roundtrip():
    parts = [petersen(), triangle(), triangle(), make_graph(2, [(0, 1)])]
    g = block_chain(parts)
    dec = block_decomposition(g)
    assert len(dec.blocks) == len(parts)
    recovered = sorted(
        canonical_form(_induced(g, block)) for block in dec.blocks
    )
    assert recovered == sorted(canonical_form(p) for p in parts)


def _induced(g, vertices):
    from cyclemod import induced_subgraph

    return induced_subgraph(g, vertices)[0]


def test_every_cycle_stays_inside_one_block():
    g = block_chain([triangle(), complete(4), petersen()])
    blocks = [set(b) for b in block_decomposition(g).blocks]
    for cycle in enumerate_cycles(g):
        members = set(cycle.vertices)
        assert any(members <= block for block in blocks)
