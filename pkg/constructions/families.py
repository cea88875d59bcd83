"""
The H_{t,l} host graphs with their families of maximally independent t-sets,
and their lifts to (3,t+1)-systems.
"""

from __future__ import annotations

import logging
from itertools import product

from pydantic import BaseModel, ConfigDict, Field, model_validator

from graphs.graph import Graph, make_graph
from systems.checks import check_maximal, check_system
from systems.models import SystemInstance, VertexSetFamily
from systems.operations import lift

logger = logging.getLogger(__name__)


class ConstructionParams(BaseModel):
    """Set size t and scale l of an H_{t,l} construction."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=2, description="Size of every family set")
    l: int = Field(ge=2, description="Scale parameter")

    @model_validator(mode="after")
    def _threshold(self) -> "ConstructionParams":
        if self.t == 3 and self.l < 3:
            raise ValueError(f"[ConstructionParams] t=3 needs l >= 3, got l={self.l}")
        return self


# ---------------------------------------------------------------------------
# Hosts and families per t
# ---------------------------------------------------------------------------

def _matching_removed(l: int) -> tuple[Graph, list[tuple[int, ...]]]:
    half = l // 2
    a_side = range(half)
    b_side = range(half, l)
    edges = [(a, b) for a in a_side for b in b_side if b != a + half]
    sets = [(a, a + half) for a in a_side]
    return make_graph(l, edges), sets


def _cycle_removed(l: int) -> tuple[Graph, list[tuple[int, ...]]]:
    # a_i = i, b_i = l + i; a_i b_j is missing for j in {i, i-1}
    edges = [(i, l + j) for i in range(l) for j in range(l) if j not in (i, (i - 1) % l)]
    sets = []
    for i in range(l):
        nxt = (i + 1) % l
        sets.append((i, l + i, nxt))
        sets.append((l + i, nxt, l + nxt))
    return make_graph(2 * l, edges), sets


def _square_grid(l: int) -> tuple[Graph, list[tuple[int, ...]]]:
    sq = l * l

    def x(a: int, b: int) -> int:
        return a * l + b

    def y(a: int, b: int) -> int:
        return sq + a * l + b

    cells = list(product(range(l), repeat=2))
    edges = [
        (x(a, b), y(c, d))
        for a, b in cells
        for c, d in cells
        if (a != c and b != d) or (a, b) == (c, d)
    ]
    sets = []
    for (a, b), (c, d) in product(cells, repeat=2):
        if a < c and b != d:
            sets.append((x(a, b), x(c, d), y(a, d), y(c, b)))
    return make_graph(2 * sq, edges), sets


def _cyclic_product(t: int, l: int) -> tuple[Graph, list[tuple[int, ...]]]:
    sq = l * l

    def vertex(v: int, a: int, b: int) -> int:
        return v * sq + a * l + b

    edges = []
    for v in range(t):
        w = (v + 1) % t
        for a, b in product(range(l), repeat=2):
            for b2, c in product(range(l), repeat=2):
                if b != b2:
                    edges.append((vertex(v, a, b), vertex(w, b2, c)))
    sets = [
        tuple(vertex(v, s[v - 1], s[v]) for v in range(t))
        for s in product(range(l), repeat=t)
    ]
    return make_graph(t * sq, edges), sets


def host_and_sets(p: ConstructionParams) -> tuple[Graph, list[tuple[int, ...]]]:
    if p.t == 2:
        return _matching_removed(p.l)
    if p.t == 3:
        return _cycle_removed(p.l)
    if p.t == 4:
        return _square_grid(p.l)
    return _cyclic_product(p.t, p.l)


# ---------------------------------------------------------------------------
# Public builders
# ---------------------------------------------------------------------------

def system_family(p: ConstructionParams) -> SystemInstance:
    """
    The (3,t)'-system (H_{t,l}, F_{t,l}).

    Sizes: t=2 gives l vertices and floor(l/2) sets; t=3 gives 2l and 2l;
    t=4 gives 2l^2 and l^2(l-1)^2/2; t>=5 gives t*l^2 vertices, a
    2l(l-1)-regular host and l^t sets.

    Raises:
        ValueError: if the built system fails validation.
    """
    host, sets = host_and_sets(p)
    inst = SystemInstance(host=host, family=VertexSetFamily.of(sets), r=3, t=p.t, primed=True)
    report = check_system(inst)
    if not report.valid:
        failure = report.first_failure()
        raise ValueError(f"[system_family] t={p.t}, l={p.l}: {failure.name}: {failure.counterexample}")
    logger.debug("system_family(t=%d, l=%d): %r", p.t, p.l, inst)
    return inst


def lifted_family(p: ConstructionParams) -> SystemInstance:
    """
    Lift of system_family: a (3,t+1)-system whose sets all share the new last vertex.

    The maximal flag is set exactly when the lift passes check_maximal.
    """
    lifted = lift(system_family(p))
    verdict = check_maximal(lifted)
    if not verdict.is_maximal:
        logger.debug("lifted_family(t=%d, l=%d) not maximal: %s", p.t, p.l, verdict.violating_edge)
    return lifted.with_changes(maximal=verdict.is_maximal)


def family_size(p: ConstructionParams) -> int:
    """|F_{t,l}| without building the family."""
    t, l = p.t, p.l
    if t == 2:
        return l // 2
    if t == 3:
        return 2 * l
    if t == 4:
        return l * l * (l - 1) ** 2 // 2
    return l ** t


def host_size(p: ConstructionParams) -> int:
    t, l = p.t, p.l
    if t == 2:
        return l
    if t == 3:
        return 2 * l
    if t == 4:
        return 2 * l * l
    return t * l * l
