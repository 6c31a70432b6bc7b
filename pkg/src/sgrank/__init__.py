"""Exact ranks, girths and extremal-family structure of signed graphs."""

from .core import (
    SgrParseError,
    SignedGraph,
    TwinPair,
    adjacency_matrix,
    delete_vertices,
    find_twins,
    induced_subgraph,
    load_sgr,
    parse_sgr,
    reduced_graph,
    save_sgr,
    switch,
    write_sgr,
)
from .exact import RankReport, batch_ranks, determinant, rank, rank_oracle
from .invariants import (
    CycleRecord,
    InvariantProfile,
    bipartition,
    connected_components,
    cycle_sign,
    cycles_up_to,
    girth_of_adjacency,
    is_balanced,
    is_connected,
    profile,
    shortest_cycle,
    switching_potentials,
)
from .families import (
    BalancedCompleteBipartite,
    CanonicalUnicyclic,
    Cycle,
    CycleStar,
    FamilySpec,
    Path,
    SubdividedK4,
    Theta,
    TripartiteRank3,
    expected_rank,
    generate,
    subdivided_k4_all_negative_six_cycle_signs,
)
from .classify import (
    Classification,
    classify_equals_g,
    classify_gminus2,
    is_extremal_canonical_unicyclic,
    is_rank3_tripartite,
)
from .sweep import (
    CHECKS,
    DEFAULT_CHECKS,
    Graph6Error,
    SweepConfig,
    SweepReport,
    canonical_switching_representative,
    dense_graphs,
    enumerate_signings,
    parse_graph6,
    run,
    sparse_graphs,
    write_counterexamples_csv,
)

__version__ = "0.1.0"

__all__ = [
    "SgrParseError",
    "SignedGraph",
    "TwinPair",
    "adjacency_matrix",
    "delete_vertices",
    "find_twins",
    "induced_subgraph",
    "load_sgr",
    "parse_sgr",
    "reduced_graph",
    "save_sgr",
    "switch",
    "write_sgr",
    "RankReport",
    "batch_ranks",
    "determinant",
    "rank",
    "rank_oracle",
    "CycleRecord",
    "InvariantProfile",
    "bipartition",
    "connected_components",
    "cycle_sign",
    "cycles_up_to",
    "girth_of_adjacency",
    "is_balanced",
    "is_connected",
    "profile",
    "shortest_cycle",
    "switching_potentials",
    "BalancedCompleteBipartite",
    "CanonicalUnicyclic",
    "Cycle",
    "CycleStar",
    "FamilySpec",
    "Path",
    "SubdividedK4",
    "Theta",
    "TripartiteRank3",
    "expected_rank",
    "generate",
    "subdivided_k4_all_negative_six_cycle_signs",
    "Classification",
    "classify_equals_g",
    "classify_gminus2",
    "is_extremal_canonical_unicyclic",
    "is_rank3_tripartite",
    "CHECKS",
    "DEFAULT_CHECKS",
    "Graph6Error",
    "SweepConfig",
    "SweepReport",
    "canonical_switching_representative",
    "dense_graphs",
    "enumerate_signings",
    "parse_graph6",
    "run",
    "sparse_graphs",
    "write_counterexamples_csv",
    "__version__",
]
