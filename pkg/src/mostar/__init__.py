"""Mostar index toolkit.

Exact distance invariants on simple connected graphs, certified witness
constructions realizing any admissible index value, isomorph-free
enumeration of small connected graphs, and census analytics.
"""

from .canon import canonical_certificate, canonical_rows, certificate_to_graph
from .errors import (
    BadParams,
    CertificationFailure,
    Disconnected,
    EmptyStream,
    MalformedRecord,
    MixedOrder,
    MostarError,
    NotAnEdge,
    NotRealizable,
    OddTarget,
    OutOfRange,
    SelfLoop,
    UnknownRealizability,
    UnknownSuite,
)
from .families import (
    cocktail_party,
    complete,
    complete_bipartite,
    cycle,
    family,
    path,
    split,
    star,
    starlike,
)
from .generate import GENERATE_MAX, connected_certificates, generate_connected
from .graph import (
    MAX_VERTICES,
    SHORT_FORM_MAX,
    Graph,
    build_graph,
    format_edge_list,
    parse_edge_list,
)
from .graph6 import decode_graph6, encode_graph6, read_graph6_lines
from .invariants import (
    UNREACHABLE,
    EdgeReport,
    StructuralProfile,
    distances,
    edge_report,
    is_distance_balanced,
    mostar_index,
    structural_profile,
    transmission_band,
    transmissions,
    wiener_index,
)
from .stats import (
    Histogram,
    StatsRow,
    first_realizer_order,
    merge_histograms,
    mo_histogram,
    order_histogram,
    realizer_table,
    stats_from_histogram,
    stats_row,
)
from .verify import ClaimResult, VerificationReport, verify_suite
from .witness import (
    FAMILY_TAGS,
    WitnessPlan,
    alternative_even_witness,
    chemical_witness,
    layered_even,
    three_layer,
    tree_witness,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "BadParams",
    "CertificationFailure",
    "ClaimResult",
    "Disconnected",
    "EdgeReport",
    "EmptyStream",
    "FAMILY_TAGS",
    "GENERATE_MAX",
    "Graph",
    "Histogram",
    "MAX_VERTICES",
    "MalformedRecord",
    "MixedOrder",
    "MostarError",
    "NotAnEdge",
    "NotRealizable",
    "OddTarget",
    "OutOfRange",
    "SHORT_FORM_MAX",
    "SelfLoop",
    "StatsRow",
    "StructuralProfile",
    "UNREACHABLE",
    "UnknownRealizability",
    "UnknownSuite",
    "VerificationReport",
    "WitnessPlan",
    "alternative_even_witness",
    "build_graph",
    "canonical_certificate",
    "canonical_rows",
    "certificate_to_graph",
    "chemical_witness",
    "cocktail_party",
    "complete",
    "complete_bipartite",
    "connected_certificates",
    "cycle",
    "decode_graph6",
    "distances",
    "edge_report",
    "encode_graph6",
    "family",
    "first_realizer_order",
    "format_edge_list",
    "generate_connected",
    "is_distance_balanced",
    "layered_even",
    "merge_histograms",
    "mo_histogram",
    "mostar_index",
    "order_histogram",
    "parse_edge_list",
    "path",
    "read_graph6_lines",
    "realizer_table",
    "split",
    "star",
    "starlike",
    "stats_from_histogram",
    "stats_row",
    "structural_profile",
    "three_layer",
    "transmission_band",
    "transmissions",
    "tree_witness",
    "verify_suite",
    "wiener_index",
    "witness",
]
