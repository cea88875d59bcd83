"""
(r,t)-systems: models, validity checks, operations and JSON documents.
"""

from systems.checks import check_maximal, check_system, is_maximally_free
from systems.models import (
    ConditionResult,
    MaximalityReport,
    SystemDocument,
    SystemInstance,
    SystemReport,
    VertexSetFamily,
)
from systems.operations import (
    assemble,
    cleanup,
    cleanup_step,
    cone_system,
    decompose,
    grow_system,
    lift,
    maximalize,
    restrict,
    restrict_pair,
    system_canonical_form,
)
from systems.serialization import dumps_system, loads_system

__all__ = [
    "check_maximal",
    "check_system",
    "is_maximally_free",
    "ConditionResult",
    "MaximalityReport",
    "SystemDocument",
    "SystemInstance",
    "SystemReport",
    "VertexSetFamily",
    "assemble",
    "cleanup",
    "cleanup_step",
    "cone_system",
    "decompose",
    "grow_system",
    "lift",
    "maximalize",
    "restrict",
    "restrict_pair",
    "system_canonical_form",
    "dumps_system",
    "loads_system",
]
