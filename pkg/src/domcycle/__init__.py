"""Forbidden pairs and dominating cycles in 2-connected graphs.

A small exact-computation toolkit: named small graphs and counterexample
families, induced-subgraph freeness, Hamilton/longest/dominating cycle
search, the claw-free closure, isomorph-free generation with graph6 I/O,
and exhaustive desk-scale verification of the library's central claims.
"""
from .graphs import (
    Graph,
    check_cycle,
    cycle_successor,
    disjoint_union,
    is_cycle,
    is_dominating,
    join,
    normalize_cycle,
    union_of_copies,
)
from .zoo import (
    FAMILY_BUILDERS,
    FAMILY_MIN_S,
    NAMED_GRAPHS,
    forbidden_pairs,
    make_family,
    make_named,
    sporadic,
)
from .iso import (
    CanonicalForm,
    PreconditionError,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    connected_induced_subgraphs,
    contains_induced,
    family_refines,
    induced_copy,
    is_free,
    p4free_join_split,
)
from .cycles import (
    ResourceExhausted,
    SearchBudget,
    all_longest_cycles,
    circumference,
    cycles_of_length,
    dominating_cycle,
    every_longest_cycle_dominating,
    hamiltonian_cycle,
    has_dominating_cycle,
    is_complete_multipartite,
    is_hamiltonian,
    is_k_connected,
    is_two_connected,
    longest_cycle,
    some_longest_cycle_dominating,
    successor_disjointness,
)
from .closure import ClosureResult, closure, closure_order_independent, eligible_vertices
from .enumeration import (
    GraphStream,
    generate,
    read_graph6,
    read_graph6_file,
    write_graph6,
    write_graph6_file,
)
from .verify import THEOREM_IDS, VerificationReport, run, verify_necessity_scan

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "check_cycle",
    "cycle_successor",
    "disjoint_union",
    "is_cycle",
    "is_dominating",
    "join",
    "normalize_cycle",
    "union_of_copies",
    "FAMILY_BUILDERS",
    "FAMILY_MIN_S",
    "NAMED_GRAPHS",
    "forbidden_pairs",
    "make_family",
    "make_named",
    "sporadic",
    "CanonicalForm",
    "PreconditionError",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "connected_induced_subgraphs",
    "contains_induced",
    "family_refines",
    "induced_copy",
    "is_free",
    "p4free_join_split",
    "ResourceExhausted",
    "SearchBudget",
    "all_longest_cycles",
    "circumference",
    "cycles_of_length",
    "dominating_cycle",
    "every_longest_cycle_dominating",
    "hamiltonian_cycle",
    "has_dominating_cycle",
    "is_complete_multipartite",
    "is_hamiltonian",
    "is_k_connected",
    "is_two_connected",
    "longest_cycle",
    "some_longest_cycle_dominating",
    "successor_disjointness",
    "ClosureResult",
    "closure",
    "closure_order_independent",
    "eligible_vertices",
    "GraphStream",
    "generate",
    "read_graph6",
    "read_graph6_file",
    "write_graph6",
    "write_graph6_file",
    "THEOREM_IDS",
    "VerificationReport",
    "run",
    "verify_necessity_scan",
]
