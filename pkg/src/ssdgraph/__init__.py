"""Decomposition and enumeration of strongly connected induced subgraphs."""

from .decomp import (
    Classification,
    Kind,
    MinRsPath,
    classify,
    complement_of,
    gen_minrs_without_root,
    is_minrs_disjoint,
    maxpss_all,
    maxpss_all_maxpss_disjoint,
    maxpss_all_minrs_disjoint,
    maxpss_of_any_digraph,
    scan_minrs,
)
from .dominators import DominatorTree, DominatorTreePair, build_dominator_tree, build_pair, dominates
from .enumeration import (
    EnumStats,
    SsdOracles,
    enum_ssd,
    enumerate_strong_subgraphs,
    iter_ssd,
    iter_strong_subgraphs,
    strong_oracles,
)
from .errors import (
    GraphError,
    GraphFormatError,
    InternalError,
    NotStronglyConnectedError,
    PreconditionError,
    SelfLoopError,
    SizeGuardError,
)
from .graph import (
    Digraph,
    induced_subgraph,
    is_strongly_connected,
    parse_edge_list,
    strongly_connected_components,
    transpose,
)
from .hamiltonian import (
    ClassGraph,
    build_class_graph,
    hamiltonian_cycle,
    hamiltonian_via_spanning_subgraph,
    minrs_disjoint_making_edge,
)

__version__ = "0.1.0"

__all__ = [
    "ClassGraph",
    "Classification",
    "Digraph",
    "DominatorTree",
    "DominatorTreePair",
    "EnumStats",
    "GraphError",
    "GraphFormatError",
    "InternalError",
    "Kind",
    "MinRsPath",
    "NotStronglyConnectedError",
    "PreconditionError",
    "SelfLoopError",
    "SizeGuardError",
    "SsdOracles",
    "build_class_graph",
    "build_dominator_tree",
    "build_pair",
    "classify",
    "complement_of",
    "dominates",
    "enum_ssd",
    "enumerate_strong_subgraphs",
    "gen_minrs_without_root",
    "hamiltonian_cycle",
    "hamiltonian_via_spanning_subgraph",
    "induced_subgraph",
    "is_minrs_disjoint",
    "is_strongly_connected",
    "iter_ssd",
    "iter_strong_subgraphs",
    "maxpss_all",
    "maxpss_all_maxpss_disjoint",
    "maxpss_all_minrs_disjoint",
    "maxpss_of_any_digraph",
    "minrs_disjoint_making_edge",
    "parse_edge_list",
    "scan_minrs",
    "strong_oracles",
    "strongly_connected_components",
    "transpose",
]
