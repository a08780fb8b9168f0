"""Marked permutation graphs: cubic graphs whose distinguished perfect
matching leaves two chordless cycles.

The package builds crossing graphs of the standard two-row drawing,
extracts certified Petersen subdivisions through a prescribed matching
edge, enumerates all matched 4-cycles and Petersen witnesses by brute
force, generates the extremal G_k family, and ships executable checkers
for the structural lemmas at desk scale.
"""

__version__ = "0.1.0"

from .census import (
    CensusReport,
    census,
    check_lower_bound,
    check_redrawing,
    check_replace,
    check_zhang,
    count_per_edge,
    enumerate_m_p10,
    exhaustive_scan,
    random_instance,
)
from .cograph import (
    InducedPath4,
    TwinKind,
    TwinPair,
    find_induced_p4,
    find_twins,
    is_p4_free,
)
from .core import (
    PETERSEN,
    PRISM,
    Arc,
    FourCycle,
    MarkedPermutationGraph,
    Side,
    SuppressedGraph,
    VertexRef,
    apply_symmetry,
    enumerate_m_c4,
    find_cyclic_cut,
    friend,
    girth,
    is_cyclically_5_edge_connected,
    is_petersen,
    parse_instance,
    parse_instances,
    reflect,
    relabel_witness,
    rotate_a,
    rotate_a_prime,
    suppress_match,
    swap_sides,
    symmetry,
    validate,
)
from .crossing import (
    CrossingGraph,
    build_crossing_graph,
    count_segment_crossings,
    standard_drawing,
)
from .family import (
    EdgeClass,
    EdgeClassification,
    GkInstance,
    classify_edge,
    generate_gk,
    verify_gk,
)
from .witness import (
    C4ReduceStep,
    P4FoundStep,
    PetersenWitness,
    ReductionTrace,
    TwinContractStep,
    c4_reduce,
    find_p10_through,
    p10_from_p4,
    replay_trace,
    twin_contract,
    witness_report_dict,
)

__all__ = [
    "__version__",
    "Arc",
    "C4ReduceStep",
    "CensusReport",
    "CrossingGraph",
    "EdgeClass",
    "EdgeClassification",
    "FourCycle",
    "GkInstance",
    "InducedPath4",
    "MarkedPermutationGraph",
    "P4FoundStep",
    "PETERSEN",
    "PRISM",
    "PetersenWitness",
    "ReductionTrace",
    "Side",
    "SuppressedGraph",
    "TwinContractStep",
    "TwinKind",
    "TwinPair",
    "VertexRef",
    "apply_symmetry",
    "build_crossing_graph",
    "c4_reduce",
    "census",
    "check_lower_bound",
    "check_redrawing",
    "check_replace",
    "check_zhang",
    "classify_edge",
    "count_per_edge",
    "count_segment_crossings",
    "enumerate_m_c4",
    "enumerate_m_p10",
    "exhaustive_scan",
    "find_cyclic_cut",
    "find_induced_p4",
    "find_p10_through",
    "find_twins",
    "friend",
    "generate_gk",
    "girth",
    "is_cyclically_5_edge_connected",
    "is_p4_free",
    "is_petersen",
    "p10_from_p4",
    "parse_instance",
    "parse_instances",
    "random_instance",
    "reflect",
    "relabel_witness",
    "replay_trace",
    "rotate_a",
    "rotate_a_prime",
    "standard_drawing",
    "suppress_match",
    "swap_sides",
    "symmetry",
    "twin_contract",
    "validate",
    "verify_gk",
    "witness_report_dict",
]
