"""Odd list-coloring toolkit for sparse surface-embedded graphs.

Exact solvers and verifiers for odd and relaxed-odd list colorings, cycle
hypothesis checking with a relaxation edge set, combinatorial surface
embeddings with face tracing up to Euler genus 2, structural configuration
audits, and an exact discharging ledger.
"""

from .graphs import (
    Cycle,
    Graph,
    HypothesisReport,
    canonical_cycle,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    cycle_in,
    enumerate_cycles,
    girth,
    hypothesis_check,
    is_r_relaxed,
    one_subdivision,
    path_graph,
    r_length,
    r_set,
    r_set_from_indices,
)
from .embedding import (
    EmbeddedGraph,
    FaceWalk,
    RotationSystem,
    embed_search,
    euler_genus,
    face_adjacency,
    face_length,
    normalize_signatures,
    sorted_rotation,
    trace_faces,
)
from .coloring import (
    ChoosabilityReport,
    ListAssignment,
    ReductionRecord,
    RelaxedInstance,
    extend_low_degree,
    is_odd_coloring,
    is_proper,
    is_relaxed_odd,
    odd_chromatic_number,
    odd_witness,
    reduce_low_degree,
    sampled_choosability,
    solve,
    uniform_lists,
)
from .audit import (
    AuditEntry,
    AuditReport,
    audit_graph,
    check_degree_lemmas,
    check_face_lemmas,
    check_four_vertex_configs,
    check_relaxed_neighborhoods,
    check_triangle_lemmas,
    full_audit,
)
from .discharge import (
    ChargeLedger,
    ChargeReport,
    HuntReport,
    Transfer,
    charge_report,
    euler_identity_twelfths,
    generate_transfers,
    hunt,
    initial_charges,
    settle,
)
from .generate import GenerationBudgetError, generate_girth_instances

__all__ = [name for name in dir() if not name.startswith("_")]
