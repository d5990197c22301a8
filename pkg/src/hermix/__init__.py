"""Exact alpha-hermitian adjacency matrices of mixed graphs.

A mixed graph carries undirected edges (digons) and directed arcs. Its
alpha-hermitian adjacency matrix puts 1 on digons, a root of unity alpha on
arcs (conjugate in the mirror entry), and 0 elsewhere. This package computes
exact determinants and inverses of such matrices over cyclotomic fields via
combinatorial formulas, and decides when the inverse at alpha = exp(2*pi*i/3)
is +-1 diagonally similar to another hermitian adjacency matrix.
"""

from .cyclotomic import (
    OTHER,
    ZERO,
    CyclotomicContext,
    CyclotomicNumber,
    SignedPower,
    classify_entry,
    cyclotomic_polynomial,
)
from .documents import GraphDocument, generate_instance, parse_graph, render_document
from .errors import (
    BadVertexId,
    ContextMismatch,
    DimensionTooLarge,
    Disconnected,
    DuplicateEdge,
    GenerationFailed,
    HasArcs,
    HermixError,
    InternalCheckFailed,
    InvalidParameter,
    NoDoublePath,
    NotAWalk,
    NotBipartite,
    NotInClassH,
    NotPerfect,
    NotTwoPegs,
    NotUnicyclic,
    NumericallySingular,
    OddCycleParity,
    ParseError,
    SameVertex,
    SelfLoop,
    SingularMatrix,
)
from .graph import (
    Cycle,
    InducedSubgraph,
    MixedGraph,
    canonical_cycle,
    enumerate_paths,
    remove_vertices,
    unique_cycle,
)
from .inverse import (
    InverseReport,
    coaug_count_matrix,
    inverse_bipartite_upm,
    inverse_entry_general,
    orient_nonmatching,
)
from .matching import (
    Matching,
    bipartition,
    co_augmenting_paths,
    ensure_class_h,
    find_perfect_matching,
    has_alternating_cycle,
    is_co_augmenting,
    is_unique_perfect_matching,
    unique_perfect_matching,
)
from .spectral import (
    ElementarySubgraph,
    ExactHermitianMatrix,
    det_leibniz,
    det_via_elementary,
    enumerate_spanning_elementary,
    h_alpha_matrix,
    numeric_inverse,
    walk_value,
)
from .unicyclic import (
    DiagonalSigns,
    NotSimilar,
    Obstruction,
    PegInfo,
    Similar,
    check_her,
    classify_gamma_similarity,
    exhaustive_diag_similarity,
    f_walk,
    peg_info,
    sign_assignment,
    two_peg_entry,
)

__version__ = "0.1.0"

__all__ = [
    "BadVertexId",
    "ContextMismatch",
    "Cycle",
    "CyclotomicContext",
    "CyclotomicNumber",
    "DiagonalSigns",
    "DimensionTooLarge",
    "Disconnected",
    "DuplicateEdge",
    "ElementarySubgraph",
    "ExactHermitianMatrix",
    "GenerationFailed",
    "GraphDocument",
    "HasArcs",
    "HermixError",
    "InducedSubgraph",
    "InternalCheckFailed",
    "InvalidParameter",
    "InverseReport",
    "Matching",
    "MixedGraph",
    "NoDoublePath",
    "NotAWalk",
    "NotBipartite",
    "NotInClassH",
    "NotPerfect",
    "NotSimilar",
    "NotTwoPegs",
    "NotUnicyclic",
    "NumericallySingular",
    "OTHER",
    "Obstruction",
    "OddCycleParity",
    "ParseError",
    "PegInfo",
    "SameVertex",
    "SelfLoop",
    "SignedPower",
    "Similar",
    "SingularMatrix",
    "ZERO",
    "bipartition",
    "canonical_cycle",
    "check_her",
    "classify_entry",
    "classify_gamma_similarity",
    "co_augmenting_paths",
    "coaug_count_matrix",
    "cyclotomic_polynomial",
    "det_leibniz",
    "det_via_elementary",
    "enumerate_paths",
    "enumerate_spanning_elementary",
    "ensure_class_h",
    "exhaustive_diag_similarity",
    "f_walk",
    "find_perfect_matching",
    "generate_instance",
    "h_alpha_matrix",
    "has_alternating_cycle",
    "inverse_bipartite_upm",
    "inverse_entry_general",
    "is_co_augmenting",
    "is_unique_perfect_matching",
    "numeric_inverse",
    "orient_nonmatching",
    "parse_graph",
    "peg_info",
    "remove_vertices",
    "render_document",
    "sign_assignment",
    "two_peg_entry",
    "unique_cycle",
    "unique_perfect_matching",
    "walk_value",
]
