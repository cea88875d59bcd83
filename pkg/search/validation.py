"""
Re-check the witness attached to an ExtremalRecord.

Used by the result cache before a stored record is reused: the witness must
decode, match the record's parameters and value, and pass the predicate of
its kind. Records without a value (nonexistent, budget_exceeded) have no
witness to check and are accepted as stored.
"""

from __future__ import annotations

import logging
from typing import Optional

from constructions.shattering import is_shattering
from graphs.graph6 import ParseError, decode_graph
from graphs.saturation import is_saturated, is_tsat_witness
from search.models import ExtremalRecord, RecordKind, RecordStatus
from systems.checks import check_system
from systems.serialization import loads_system

logger = logging.getLogger(__name__)

_GRAPH_KINDS = {RecordKind.SAT, RecordKind.TSAT, RecordKind.TSAT_MIN_DEG}
_SIZE_KINDS = {RecordKind.S_RT, RecordKind.S3T_PRIME}
_EDGE_KINDS = {RecordKind.E_RT, RecordKind.E_RT_MAXIMAL, RecordKind.E3T_DOUBLEPRIME}


def _graph_problem(record: ExtremalRecord) -> Optional[str]:
    p = record.params
    g = decode_graph(record.witness)
    if g.n != p["n"]:
        return f"witness has {g.n} vertices, expected {p['n']}"
    if g.edge_count != record.value:
        return f"witness has {g.edge_count} edges, record says {record.value}"
    if record.kind == RecordKind.SAT:
        ok = is_saturated(g, p["r"])
    else:
        ok = is_tsat_witness(g, p["r"], p.get("t"))
    return None if ok else f"witness fails the {record.kind.value} predicate"


def _system_problem(record: ExtremalRecord) -> Optional[str]:
    p = record.params
    inst = loads_system(record.witness)
    r = p.get("r", 3)
    primed = record.kind in (RecordKind.S3T_PRIME, RecordKind.E3T_DOUBLEPRIME)
    if (inst.r, inst.t, inst.primed) != (r, p["t"], primed):
        return f"witness is a ({inst.r},{inst.t}) system, primed={inst.primed}"
    if record.kind == RecordKind.E_RT_MAXIMAL and not inst.maximal:
        return "witness does not claim maximality"
    report = check_system(inst)
    if not report.valid:
        failure = report.first_failure()
        return f"witness invalid: {failure.name}: {failure.counterexample}"
    if record.kind in _SIZE_KINDS:
        if inst.m != p["m"] or inst.size != record.value:
            return f"witness has m={inst.m}, |F|={inst.size}"
        return None
    if inst.size != p["s"] or inst.host.edge_count != record.value:
        return f"witness has |F|={inst.size}, e(H)={inst.host.edge_count}"
    return None


def _sequence_problem(record: ExtremalRecord) -> Optional[str]:
    k = record.params["k"]
    seqs = [tuple(int(c) for c in word) for word in record.witness.split(",")]
    if len(set(seqs)) != record.value or any(len(x) != k for x in seqs):
        return f"witness is not {record.value} distinct sequences of length {k}"
    return None if is_shattering(k, seqs) else "witness does not shatter every pair"


def witness_problem(record: ExtremalRecord) -> Optional[str]:
    """Why the record's witness does not support its value, or None when it does."""
    if record.status != RecordStatus.FOUND:
        return None
    if not record.witness:
        return "found record without a witness"
    try:
        if record.kind in _GRAPH_KINDS:
            return _graph_problem(record)
        if record.kind in _SIZE_KINDS or record.kind in _EDGE_KINDS:
            return _system_problem(record)
        return _sequence_problem(record)
    except (ParseError, ValueError, KeyError) as e:
        return f"witness unreadable: {e}"


def revalidate(record: ExtremalRecord) -> bool:
    problem = witness_problem(record)
    if problem is not None:
        logger.warning("record %s failed re-validation: %s", record.key(), problem)
    return problem is None
