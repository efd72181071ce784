"""Spectral certificates for generalized connectivity, toughness and bounded-degree
spanning trees of regular graphs, with exact brute-force oracles to check them."""

from .certifiers import (
    EPSILON,
    BoundsReport,
    Certificate,
    Hypothesis,
    Status,
    TheoremId,
    brouwer_conjecture_bound,
    certify_bipartite_toughness,
    certify_edge_connectivity,
    certify_l_connectivity,
    certify_spanning_k_tree,
    certify_toughness_one,
    run_certifiers,
    spectral_connectivity_bounds,
    spectral_toughness_bounds,
    toughness_floor,
)
from .connectivity import (
    connectivity_profile,
    edge_connectivity,
    independence_number,
    l_connectivity,
    max_flow_unit,
    vertex_connectivity,
)
from .constructions import (
    FamilySpec,
    enumerate_connected_regular,
    gadget_4regular,
    matching_complement,
    membership_X_family,
    named,
    random_regular,
    x_graph,
)
from .graph import (
    Graph,
    GraphFormatError,
    bipartition,
    complement,
    components,
    delete_vertices,
    from_edge_list,
    induced_subgraph,
    is_regular,
    join,
    parse_graph6,
    to_graph6,
)
from .spectra import (
    Spectrum,
    adjacency_spectrum,
    average_degree_bound,
    check_interlacing_corollary,
    lambda_abs,
    lambda_k,
    theta,
)
from .toughness import Toughness, has_spanning_k_tree, is_t_tough, toughness_exact, win_condition

__version__ = "0.1.0"
