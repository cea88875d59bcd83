"""
Explicit constructions: extremal and sporadic graphs, shattering sets,
twin-free saturated graphs, H_{t,l} system families and upper-bound witnesses.
"""

from constructions.catalog import CATALOG, build
from constructions.families import ConstructionParams, lifted_family, system_family
from constructions.shattering import ShatteringSet, is_shattering, shattering_set
from constructions.small import NAMED_SMALL, ehm_graph, named_small
from constructions.twin_free import NonexistentError, shattering_graph, twin_free_saturated
from constructions.witnesses import (
    InfeasibleError,
    e34_upper_witness,
    e35_upper_witness,
    excess_constant,
    many_sets_witness,
    tsat_min_deg_upper_witness,
    tsat_upper_witness,
)

__all__ = [
    "CATALOG",
    "build",
    "ConstructionParams",
    "lifted_family",
    "system_family",
    "ShatteringSet",
    "is_shattering",
    "shattering_set",
    "NAMED_SMALL",
    "ehm_graph",
    "named_small",
    "NonexistentError",
    "shattering_graph",
    "twin_free_saturated",
    "InfeasibleError",
    "e34_upper_witness",
    "e35_upper_witness",
    "excess_constant",
    "many_sets_witness",
    "tsat_min_deg_upper_witness",
    "tsat_upper_witness",
]
