"""
System JSON documents: {host, sets, mults, r, t, primed, maximal} with the
host as a graph6 string.
"""

from __future__ import annotations

import logging

from pydantic import ValidationError

from graphs.graph6 import ParseError, decode_graph, encode_graph6
from systems.models import SystemDocument, SystemInstance, VertexSetFamily

logger = logging.getLogger(__name__)


def to_document(inst: SystemInstance) -> SystemDocument:
    return SystemDocument(
        host=encode_graph6(inst.host).decode("ascii"),
        sets=[list(s) for s in inst.family.sets],
        mults=list(inst.family.multiplicities),
        r=inst.r,
        t=inst.t,
        primed=inst.primed,
        maximal=inst.maximal,
    )


def from_document(doc: SystemDocument) -> SystemInstance:
    """
    Rebuild a SystemInstance.

    Raises:
        ParseError: if the host string is not valid graph6 / sparse6.
        ValueError: if the family does not fit the host or the parameters
            are inconsistent.
    """
    host = decode_graph(doc.host)
    family = VertexSetFamily.of(doc.sets, doc.mults)
    return SystemInstance(
        host=host,
        family=family,
        r=doc.r,
        t=doc.t,
        primed=doc.primed,
        maximal=doc.maximal,
    )


def dumps_system(inst: SystemInstance) -> str:
    return to_document(inst).model_dump_json()


def loads_system(text: str | bytes) -> SystemInstance:
    """
    Parse system JSON.

    Raises:
        ParseError: on malformed JSON or a malformed host encoding.
        ValueError: on a structurally valid document describing an impossible system.
    """
    try:
        doc = SystemDocument.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"[system json] {e.errors()[0]['msg']}", 0) from e
    return from_document(doc)
