"""Signed nut graphs: exact construction, classification and search."""

from .graphs import (
    DisconnectedGraphError,
    GraphError,
    SignedGraph,
    SpanningTree,
    SwitchingSet,
    enumerate_class_representatives,
    is_traditional,
    spanning_tree,
    switching_equivalent,
    tree_positive_representative,
)
from .linalg import (
    KernelBasis,
    RationalMatrix,
    canonical_eigenvector,
    fullify_basis,
    kernel_basis,
    rank_nullity,
)
from .classify import NutReport, classify, is_unsigned_nut, positive_representative
from .constructions import (
    CompleteNut,
    FowlerExpansion,
    check_equiv_labeling,
    complete_nut,
    complete_nut_spectrum,
    fowler,
    transport_eigenvector,
)
from .search import (
    SearchConfig,
    SearchOutcome,
    count_signings,
    existence_verdict,
    search_class,
)
from .gio import ParseError, emit_graph6, emit_report, emit_signed, parse_graph6, parse_signed

__version__ = "0.1.0"

__all__ = [
    "SignedGraph",
    "SwitchingSet",
    "SpanningTree",
    "GraphError",
    "DisconnectedGraphError",
    "spanning_tree",
    "tree_positive_representative",
    "is_traditional",
    "switching_equivalent",
    "enumerate_class_representatives",
    "RationalMatrix",
    "KernelBasis",
    "rank_nullity",
    "kernel_basis",
    "fullify_basis",
    "canonical_eigenvector",
    "NutReport",
    "classify",
    "positive_representative",
    "is_unsigned_nut",
    "FowlerExpansion",
    "CompleteNut",
    "fowler",
    "transport_eigenvector",
    "complete_nut",
    "complete_nut_spectrum",
    "check_equiv_labeling",
    "SearchConfig",
    "SearchOutcome",
    "search_class",
    "existence_verdict",
    "count_signings",
    "ParseError",
    "parse_graph6",
    "emit_graph6",
    "parse_signed",
    "emit_signed",
    "emit_report",
]
