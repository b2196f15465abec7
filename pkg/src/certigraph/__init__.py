"""certigraph: certifying dichotomy solvers built from two minimal-
counterexample arguments over finite graphs.

- Matching dichotomy (Kotzig): a connected graph with a perfect matching
  either contains a bridge inside that matching or admits a second perfect
  matching; ``kotzig_dichotomy`` always returns a definitionally verified
  certificate for one arm.
- Color dichotomy (Yeo): a connected edge-colored graph either has a
  cut-color vertex (every component of its removal is rejoined through
  edges of one color) or contains a properly colored (alternating) cycle;
  ``yeo_dichotomy`` certifies one arm.

Every step of the underlying induction is exposed as an independently
testable surgery with an explicit trace, and every lift is re-verified
against the definitions, never trusted.
"""

from .errors import ArgumentError, FormatError, InternalInvariantError
from .graph import (
    Edge,
    Graph,
    SurgeryTrace,
    VertexPartition,
    bridges,
    components,
    cut_vertices,
    delete_edge,
    delete_vertex,
    glue_vertices,
    induced_subgraph,
    is_connected,
    is_monochrome,
    random_graph,
)
from .formats import (
    load_graph_text,
    pair_order,
    parse_cel,
    parse_graph6,
    write_cel,
    write_graph6,
)
from .matching import (
    Matching,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    first_perfect_matching,
    has_unique_pm,
    matching_alternating_cycle,
    second_matching,
    verify_perfect_matching,
)
from .kotzig import (
    KotzigCertificate,
    MatchingBridge,
    SecondMatching,
    SideSplit,
    build_side_graph,
    combine_matchings,
    find_common_bridge_pair,
    kotzig_dichotomy,
    kotzig_holds,
    split_sides,
    verify_kotzig_certificate,
)
from .yeo import (
    AlternatingCycle,
    AlternatingPath,
    CaseFlags,
    CountingReport,
    CutColorCertificate,
    MonoArcDigraph,
    PendantConstruction,
    YeoCertificate,
    case1_pendant,
    case3_reduce,
    counting_report,
    cut_color_scan,
    degree2_lemma_check,
    find_alternating_cycle,
    is_cut_color_vertex,
    join_paths_to_cycle,
    lift_case3_cycle,
    lift_pendant_cycle,
    mono_arc_digraph,
    verify_alternating_cycle,
    verify_alternating_path,
    verify_cut_color,
    yeo_dichotomy,
)
from .reductions import (
    MATCHING_COLOR,
    NON_MATCHING_COLOR,
    TwoColoring,
    alternating_cycle_to_second_matching,
    derive_kotzig_bridge_from_yeo,
    grossman_haggkvist_check,
    matching_to_coloring,
)
from .certificates import (
    CheckResult,
    canonical_graph_text,
    check_certificate,
    graph_hash,
    serialize_certificate,
)
from .campaigns import (
    Campaign,
    CampaignReport,
    ExhaustiveSource,
    Graph6FileSource,
    RandomSource,
    case3_lifting_battery,
    enumerate_colorings,
    enumerate_labeled_graphs,
    pendant_lifting_battery,
    replay_violation,
    run_campaign,
)
from ._kernels import backend_name

__version__ = "0.1.0"

__all__ = [
    "ArgumentError", "FormatError", "InternalInvariantError",
    "Edge", "Graph", "SurgeryTrace", "VertexPartition",
    "bridges", "components", "cut_vertices", "delete_edge", "delete_vertex",
    "glue_vertices", "induced_subgraph", "is_connected", "is_monochrome",
    "random_graph",
    "load_graph_text", "pair_order", "parse_cel", "parse_graph6",
    "write_cel", "write_graph6",
    "Matching", "count_perfect_matchings", "enumerate_perfect_matchings",
    "first_perfect_matching", "has_unique_pm", "matching_alternating_cycle",
    "second_matching", "verify_perfect_matching",
    "KotzigCertificate", "MatchingBridge", "SecondMatching", "SideSplit",
    "build_side_graph", "combine_matchings", "find_common_bridge_pair",
    "kotzig_dichotomy", "kotzig_holds", "split_sides", "verify_kotzig_certificate",
    "AlternatingCycle", "AlternatingPath", "CaseFlags", "CountingReport",
    "CutColorCertificate", "MonoArcDigraph", "PendantConstruction", "YeoCertificate",
    "case1_pendant", "case3_reduce", "counting_report", "cut_color_scan",
    "degree2_lemma_check", "find_alternating_cycle", "is_cut_color_vertex",
    "join_paths_to_cycle", "lift_case3_cycle", "lift_pendant_cycle",
    "mono_arc_digraph", "verify_alternating_cycle", "verify_alternating_path",
    "verify_cut_color", "yeo_dichotomy",
    "MATCHING_COLOR", "NON_MATCHING_COLOR", "TwoColoring",
    "alternating_cycle_to_second_matching", "derive_kotzig_bridge_from_yeo",
    "grossman_haggkvist_check", "matching_to_coloring",
    "CheckResult", "canonical_graph_text", "check_certificate", "graph_hash",
    "serialize_certificate",
    "Campaign", "CampaignReport", "ExhaustiveSource", "Graph6FileSource",
    "RandomSource", "case3_lifting_battery", "enumerate_colorings",
    "enumerate_labeled_graphs", "pendant_lifting_battery", "replay_violation",
    "run_campaign",
    "backend_name",
    "__version__",
]
