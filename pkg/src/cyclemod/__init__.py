"""Detection, certification and extremal search for cycles of prescribed
length modulo k in simple graphs."""

from . import errors
from .connectivity import (
    BlockDecomposition,
    Insufficient,
    block_decomposition,
    connected_components,
    disjoint_paths,
    find_essential_cut,
    is_2_connected,
    is_connected,
    is_essentially_3_connected,
)
from .constructions import (
    ExtremalDecomposition,
    block_chain,
    complete,
    complete_bipartite,
    cycle_graph,
    extremal_family,
    l_graph,
    petersen,
    triangle,
)
from .cycles import (
    CycleBridge,
    CycleWitness,
    OrientedCycle,
    PathWitness,
    ResidueClass,
    bridges_of_cycle,
    check_witness,
    enumerate_cycles,
    find_cycle_mod,
    format_witness,
    girth,
    is_mod_diagonal,
    is_valid_path,
    parse_witness,
    residue_spectrum,
    spectrum_by_enumeration,
    two_disjoint_cycles,
)
from .extremal import (
    BoundResult,
    CTableRow,
    SearchReport,
    c_constant_table,
    edge_bound,
    scan_l123_classification,
    verify_dean_corpus,
    verify_extremal_uniqueness_n10,
    verify_main_theorem,
    verify_tightness,
)
from .generate import augmented_classes, enumerate_graphs, residue_free_classes
from .graph import (
    DegreeStats,
    Graph,
    degree_stats,
    induced_subgraph,
    make_graph,
    rho,
    vertex_set,
)
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .iso import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from .lemmas import (
    CLASSIFIED,
    COUNTEREXAMPLE,
    NOT_APPLICABLE,
    L123Result,
    Lemma1Report,
    classify_L123_instance,
    lemma1_checks,
    two_paths_distinct_mod3,
    verify_clashing_configuration,
    verify_three_path_fan,
)

__version__ = "0.1.0"
