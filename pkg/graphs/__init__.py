"""
Graph core: bit-row graphs, canonical labeling, graph6 and K_r-saturation.
"""

from graphs.canonical import are_isomorphic, canonical_form, canonical_labeling
from graphs.graph import (
    Graph,
    blow_up,
    complement,
    complete_bipartite,
    complete_graph,
    cone,
    contains_clique,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced,
    is_twin_free,
    make_graph,
    path_graph,
    twin_partition,
    twin_quotient,
)
from graphs.graph6 import ParseError, decode_graph, decode_graph6, encode_graph6, encode_sparse6
from graphs.models import BlowUpSpec, SaturationReport, TwinPartition
from graphs.saturation import is_saturated, is_tsat_witness, saturate, saturation_report

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "canonical_labeling",
    "Graph",
    "blow_up",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "cone",
    "contains_clique",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "induced",
    "is_twin_free",
    "make_graph",
    "path_graph",
    "twin_partition",
    "twin_quotient",
    "ParseError",
    "decode_graph",
    "decode_graph6",
    "encode_graph6",
    "encode_sparse6",
    "BlowUpSpec",
    "SaturationReport",
    "TwinPartition",
    "is_saturated",
    "is_tsat_witness",
    "saturate",
    "saturation_report",
]
