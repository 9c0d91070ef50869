"""De Bruijn sequences, de Bruijn digraphs, and watchman's-walk analysis."""

from .analysis import (
    Classification,
    Reason,
    SkippedSequence,
    SweepReport,
    Verdict,
    VerificationRecord,
    classify,
    has_constant_run,
    has_distinct_windows,
    is_doubled,
    rotation_representatives,
    sweep,
    verify,
)
from .errors import DomainError, InvariantViolation, ResourceCapError
from .graphcore import (
    Digraph,
    Provenance,
    Walk,
    build_de_bruijn_graph,
    closed_out_neighborhood,
    eulerian_circuit,
    gen_eulerian,
    generated_subdigraph,
    is_closed_dominating_walk,
    is_dominating_set,
    to_dot,
)
from .seqcore import (
    DEFAULT_SIZE_CAP,
    Alphabet,
    CyclicSequence,
    KString,
    KTour,
    cycle_shift,
    de_bruijn_shift_successors,
    gen_fkm,
    gen_greedy,
    is_de_bruijn_sequence,
    k_tour,
    parse_sequence,
    read_sequences,
    successors,
)
from .watchman import (
    DEFAULT_VERTEX_CAP,
    SolveResult,
    construct_watchman_walk,
    enumerate_min_walks,
    induced_walk,
    solve_min_walk,
    watchman_number,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Classification",
    "CyclicSequence",
    "DEFAULT_SIZE_CAP",
    "DEFAULT_VERTEX_CAP",
    "Digraph",
    "DomainError",
    "InvariantViolation",
    "KString",
    "KTour",
    "Provenance",
    "Reason",
    "ResourceCapError",
    "SkippedSequence",
    "SolveResult",
    "SweepReport",
    "Verdict",
    "VerificationRecord",
    "Walk",
    "build_de_bruijn_graph",
    "classify",
    "closed_out_neighborhood",
    "construct_watchman_walk",
    "cycle_shift",
    "de_bruijn_shift_successors",
    "enumerate_min_walks",
    "eulerian_circuit",
    "gen_eulerian",
    "gen_fkm",
    "gen_greedy",
    "generated_subdigraph",
    "has_constant_run",
    "has_distinct_windows",
    "induced_walk",
    "is_closed_dominating_walk",
    "is_de_bruijn_sequence",
    "is_dominating_set",
    "is_doubled",
    "k_tour",
    "parse_sequence",
    "read_sequences",
    "rotation_representatives",
    "solve_min_walk",
    "successors",
    "sweep",
    "to_dot",
    "verify",
    "watchman_number",
]
