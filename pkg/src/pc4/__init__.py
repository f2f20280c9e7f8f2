"""Structure of properly colored C4's in edge-colored graphs.

Detection of properly colored and rainbow cycles, threshold-graph
certificates for C4-free colorings, the extremal structure classifier
and its layered decomposition, constructions of every extremal family,
closed-form bounds, and an exhaustive small-n statement harness.
"""

from .bounds import (
    BoundValue,
    Contribution,
    MatchingBound,
    SaturationReport,
    StarForestReport,
    color_contribution,
    color_degree_preserving_reduction,
    kst_bound,
    matching_extremal,
    saturation_identity_check,
    starforest_identity_check,
)
from .classify import (
    GallaiTree,
    MonochromaticBlock,
    PC4Found,
    PeelLayer,
    PeelTree,
    Structure1Witness,
    Structure2Witness,
    Structure3Witness,
    Unclassified,
    classify_structure,
    layered_decompose,
    recognize_gallai_g0,
    recognize_star_order,
    replay_peel_tree,
    verify_gallai_tree,
    verify_peel_tree,
    verify_structure,
)
from .detect import (
    CycleWitness,
    canonical_cycle,
    cycle_edge_colors,
    find_pc_c4,
    find_rainbow_cycle,
    is_properly_colored_cycle,
    verify_witness,
)
from .errors import (
    ClassNotThreshold,
    DecompositionFailed,
    DuplicateEdge,
    EdgeError,
    EmptyClass,
    Infeasible,
    InvalidParameters,
    InvalidSpec,
    InvalidTheoremId,
    LayerColorMismatch,
    NonPositiveColor,
    NotACycle,
    NotApplicable,
    NotComplete,
    NotThreshold,
    Pc4Error,
    ProperlyColoredC4Present,
    SelfLoop,
    TooSmall,
    UnknownColor,
    VertexOutOfRange,
    WrongColorCount,
)
from .generate import KINDS, GenSpec, generate
from .graph import (
    ColorClassView,
    EdgeColoredGraph,
    GraphStats,
    build_graph,
    color_class,
    color_classes,
    graph_stats,
    refine_color_components,
    subgraph_view,
)
from .harness import (
    THEOREM_IDS,
    Counterexample,
    TheoremReport,
    check_theorem,
    stirling2,
)
from .threshold import (
    Certificate,
    Drawing,
    FailureWitness,
    ForbiddenSubgraph,
    SharedTailPartition,
    SpineSplitReport,
    ThresholdVerdict,
    compute_drawing,
    decompose_two_colored_threshold,
    dominating_vertex,
    eliminate_rows,
    find_forbidden_induced,
    induced_subdrawing,
    pairwise_threshold_certificate,
    spine_order_for_set,
    threshold_check,
    two_colored_kn_drawing,
    verify_drawing,
    verify_spine_split,
)

__version__ = "0.1.0"
