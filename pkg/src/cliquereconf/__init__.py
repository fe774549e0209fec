"""Reconfiguration graphs of cliques: builders, reconstruction and structural checks."""

from .analysis import (
    CliqueDecomposition,
    PreconditionError,
    chromatic_sandwich,
    decompose_ts_clique,
    has_induced_diamond,
    simplex_median_check,
    tj4_structure_check,
    triangle_bounds_check,
    ts_planarity_check,
    verify_omega_formula,
    verify_tj_triangle_intersections,
    verify_ts_tj_vertex_edge_duality,
)
from .cliques import Clique, clique_number, count_k3, count_k4, enumerate_k_cliques, maximal_cliques
from .coloring import chromatic_number, optimal_coloring
from .corpus import generate_corpus
from .families import fibonacci_cube, gear, hypercube, johnson
from .graph import (
    Graph,
    GraphError,
    ParseError,
    add_isolated,
    cartesian_product,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    format_dot,
    format_edge_list,
    join,
    parse_edge_list,
    path_graph,
)
from .isomorphism import IsoWitness, is_isomorphic
from .kernels import BACKEND
from .planarity import is_planar
from .properties import is_acyclic, is_bipartite, is_median_graph, max_degree, medians
from .reconf import (
    LabeledReconfGraph,
    Rule,
    RuleTag,
    build_simplex,
    build_tar_lower,
    build_tar_upper,
    build_tj,
    build_ts,
    token_graph,
)
from .reconstruct import (
    Msets,
    NeighborPartition,
    NotKGoodError,
    build_msets,
    expand,
    join_lift,
    msets_reference,
    msets_to_graph,
    partition_neighbors,
    reconstruct_ts,
    verify_reconstruction,
)
from .report import Report, TheoremViolation

__version__ = "0.1.0"
