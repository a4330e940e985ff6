"""frhyper: fractional repetition codes and hypergraphs, interchangeably.

A storage placement of replicated packets on nodes and a hypergraph are the
same incidence structure read along different axes.  This package converts
between the two views, computes the exact storage metrics (guaranteed file
size, reconstruction degree, repair degrees, minimum distance), verifies the
structural bounds in exact rational arithmetic, and grows universally good
adaptive codes by recursive linear-hypergraph construction.
"""

from .analysis import (
    AdaptationSpec,
    AnalysisReport,
    adapt,
    analyze,
    file_size_table,
    is_adaptation_of,
    max_file_size,
    min_distance,
    reconstruction_degree,
    repair_degree,
    repair_degrees,
)
from .bounds import (
    BoundEntry,
    BoundReport,
    DegreeSequencePair,
    DistanceBounds,
    ExistenceVerdict,
    GfrBoundResult,
    PacketPairing,
    PairingBoundResult,
    check_bounds,
    check_pairing_bound,
    distance_bounds,
    existence_check,
    file_size_upper_bound,
    find_valid_pairing,
    flexible_bounds,
    gfr_bound_check,
    realize,
    universally_good_lower_bound,
)
from .construct import (
    ConstructionState,
    TraceStep,
    add_hyperedge,
    add_vertex_with_edge,
    algorithm1,
    densify_to,
    extend_hyperedge,
    format_trace,
    grow_to,
)
from .errors import (
    AdaptationError,
    AnalysisError,
    ConstructionError,
    DuplicatePacketError,
    EmptyEdgeError,
    EmptyNodeAfterAdaptError,
    EmptyNodeError,
    FileTooLargeError,
    FrcError,
    GuardExceededError,
    IdOutOfRangeError,
    IrreparableNodeError,
    IsolatedVertexError,
    KOutOfRangeError,
    LinearityViolationError,
    NotASupersetError,
    OddThetaError,
    OrphanPacketAfterAdaptError,
    OrphanPacketError,
    ParseError,
    TargetInfeasibleError,
    UnrealizableError,
    ValidationError,
)
from .frcformat import FrcDocument, emit_filesize_csv, parse_frc, serialize_frc
from .model import (
    ClassificationFlags,
    DualMap,
    FRCode,
    Hypergraph,
    classify,
    dual,
    fr_to_hypergraph,
    hypergraph_to_fr,
    is_connected,
    is_linear,
    is_universally_good,
    validate_fr,
)

__version__ = "0.1.0"
