"""quivalg: exact path-algebra and face-algebra analysis of finite quivers.

The library answers, exactly and without any floating point, the standard
ring-theoretic questions about two graded algebras attached to a finite
quiver Q: its path algebra and its face algebra.  The face algebra is
handled through the Kronecker square of Q, whose path algebra it is
isomorphic to; the isomorphism itself is available symbolically and can be
machine-verified in bounded degree.
"""

from .face import (
    FaceBasis,
    FaceElement,
    PathAlgebraElement,
    PresentationCheck,
    PresentationReport,
    basis_element,
    face_basis,
    face_multiply,
    face_unit,
    phi,
    verify_presentation,
)
from .graph import (
    CycleClassification,
    SccDecomposition,
    classify_cycles,
    is_connected,
    is_pairwise_strongly_connected,
    is_pairwise_strongly_connected_definitional,
    is_path_reversible,
    is_strongly_connected,
    scc,
)
from .infinity import INFINITE, Extent, Infinite, is_finite
from .intmatrix import (
    BoolMatrix,
    IntMatrix,
    bool_multiply,
    kron,
    multiply,
    nilpotency_index,
    power,
    support,
)
from .kronecker import KroneckerSquare, kronecker_square, pair_to_path, path_to_pair
from .oracle import (
    CAP_EXCEEDED,
    ExclusiveConditionError,
    oracle_dimension,
    oracle_face_dimension_both_readings,
    oracle_max_chain,
    oracle_path_reversible,
    random_quiver,
)
from .quiver import (
    Arrow,
    InvalidQuiverError,
    Path,
    Quiver,
    Violation,
    adjacency_matrix,
    count_paths,
    enumerate_paths,
    require_valid,
    validate,
)
from .quiverfile import QuiverFileError, emit_quiver_file, parse_quiver_file
from .report import (
    FACE_ALGEBRA,
    PATH_ALGEBRA,
    AlgebraReport,
    HilbertSeriesTruncation,
    InternalInconsistencyError,
    analyze_face_algebra,
    analyze_path_algebra,
    dimension,
    face_dimension,
    face_hilbert_series,
    hilbert_series,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraReport",
    "Arrow",
    "BoolMatrix",
    "CAP_EXCEEDED",
    "CycleClassification",
    "ExclusiveConditionError",
    "Extent",
    "FACE_ALGEBRA",
    "FaceBasis",
    "FaceElement",
    "HilbertSeriesTruncation",
    "INFINITE",
    "Infinite",
    "IntMatrix",
    "InternalInconsistencyError",
    "InvalidQuiverError",
    "KroneckerSquare",
    "PATH_ALGEBRA",
    "Path",
    "PathAlgebraElement",
    "PresentationCheck",
    "PresentationReport",
    "Quiver",
    "QuiverFileError",
    "SccDecomposition",
    "Violation",
    "adjacency_matrix",
    "analyze_face_algebra",
    "analyze_path_algebra",
    "basis_element",
    "bool_multiply",
    "classify_cycles",
    "count_paths",
    "dimension",
    "emit_quiver_file",
    "enumerate_paths",
    "face_basis",
    "face_dimension",
    "face_hilbert_series",
    "face_multiply",
    "face_unit",
    "hilbert_series",
    "is_connected",
    "is_finite",
    "is_pairwise_strongly_connected",
    "is_pairwise_strongly_connected_definitional",
    "is_path_reversible",
    "is_strongly_connected",
    "kron",
    "kronecker_square",
    "multiply",
    "nilpotency_index",
    "oracle_dimension",
    "oracle_face_dimension_both_readings",
    "oracle_max_chain",
    "oracle_path_reversible",
    "pair_to_path",
    "parse_quiver_file",
    "path_to_pair",
    "phi",
    "power",
    "random_quiver",
    "require_valid",
    "scc",
    "support",
    "validate",
    "verify_presentation",
]
