"""
The (r,t)-system calculus: assembly and decomposition of G(H, F), lift and
restriction through an isolated vertex, coning, maximalization, the
clean-up step and blow-up growth of primed systems.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence

from graphs.bits import has_clique, iter_bits, to_mask
from graphs.canonical import canonical_form
from graphs.graph import Graph, add_isolated, blow_up, cone, induced
from systems.checks import check_system, membership_masks
from systems.models import SystemInstance, VertexSetFamily

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _require_valid(inst: SystemInstance, where: str) -> None:
    report = check_system(inst)
    if not report.valid:
        failure = report.first_failure()
        raise ValueError(f"[{where}] invalid system: {failure.name}: {failure.counterexample}")


def _remap_family(
    family: VertexSetFamily,
    position: dict[int, int],
    keep: Optional[Iterable[int]] = None,
) -> VertexSetFamily:
    """Map every kept set through position; sets outside keep are dropped."""
    indices = range(len(family)) if keep is None else keep
    sets, mults = [], []
    for i in indices:
        sets.append(tuple(position[v] for v in family.sets[i]))
        mults.append(family.multiplicities[i])
    return VertexSetFamily.of(sets, mults)


def _drop_vertex(inst: SystemInstance, v: int) -> SystemInstance:
    """Remove v from the host together with every set containing it."""
    keep_vertices = [u for u in range(inst.m) if u != v]
    position = {u: i for i, u in enumerate(keep_vertices)}
    keep_sets = [i for i, s in enumerate(inst.family.sets) if v not in s]
    return inst.with_changes(
        host=induced(inst.host, keep_vertices),
        family=_remap_family(inst.family, position, keep_sets),
    )


# ---------------------------------------------------------------------------
# G(H, F)
# ---------------------------------------------------------------------------

def assemble(host: Graph, family: VertexSetFamily) -> Graph:
    """
    Build G(H, F): H plus one new vertex per family member (with multiplicity),
    adjacent exactly to its set. New vertices follow the host vertices in
    family order.
    """
    if family.max_vertex() >= host.n:
        raise ValueError(f"[assemble] family vertex {family.max_vertex()} outside host of size {host.n}")
    rows = list(host.rows)
    for s in family.instances():
        new = len(rows)
        rows.append(to_mask(s))
        for v in s:
            rows[v] |= 1 << new
    return Graph(len(rows), tuple(rows))


def decompose(g: Graph, cover: Iterable[int]) -> tuple[Graph, VertexSetFamily]:
    """
    Split G along a vertex cover C into (G[C], {Γ(v) : v ∉ C}).

    Host vertices are relabelled in increasing order of C; equal
    neighbourhoods merge into one set with multiplicity, in order of first
    appearance.

    Raises:
        ValueError: if some edge has no endpoint in C.
    """
    keep = sorted(set(cover))
    keep_mask = to_mask(keep)
    if keep_mask >> g.n:
        raise ValueError(f"[decompose] cover vertex outside 0..{g.n - 1}")
    outside = g.vertex_mask & ~keep_mask
    for v in iter_bits(outside):
        stray = g.rows[v] & outside
        if stray:
            u = (stray & -stray).bit_length() - 1
            raise ValueError(f"[decompose] edge ({min(u, v)}, {max(u, v)}) not covered")
    position = {v: i for i, v in enumerate(keep)}
    order: list[tuple[int, ...]] = []
    counts: dict[tuple[int, ...], int] = {}
    for v in iter_bits(outside):
        s = tuple(position[u] for u in iter_bits(g.rows[v]))
        if s not in counts:
            order.append(s)
            counts[s] = 0
        counts[s] += 1
    family = VertexSetFamily.of(order, [counts[s] for s in order])
    return induced(g, keep), family


# ---------------------------------------------------------------------------
# Lift and restriction
# ---------------------------------------------------------------------------

def restrict(inst: SystemInstance, v: int) -> SystemInstance:
    """
    Restrict a triangle-free system to the non-neighbourhood of v.

    The host becomes H[Γ'(v)] with Γ'(v) = V(H) minus Γ(v) and v, relabelled
    in increasing order, and the family becomes {S - v : v ∈ S}. A valid
    (3,t+1)-system or (3,t+1)'-system yields a (3,t)'-system.
    """
    if inst.r != 3:
        raise ValueError(f"[restrict] needs r=3, got r={inst.r}")
    if not 0 <= v < inst.m:
        raise ValueError(f"[restrict] vertex {v} out of range for m={inst.m}")
    rest = [u for u in range(inst.m) if u != v and not inst.host.rows[v] >> u & 1]
    position = {u: i for i, u in enumerate(rest)}
    sets, mults = [], []
    for s, mult in zip(inst.family.sets, inst.family.multiplicities):
        if v in s:
            sets.append(tuple(position[u] for u in s if u != v))
            mults.append(mult)
    t = None if inst.t is None else inst.t - 1
    return SystemInstance(
        host=induced(inst.host, rest),
        family=VertexSetFamily.of(sets, mults),
        r=3,
        t=t,
        primed=True,
    )


def restrict_pair(inst: SystemInstance, pair: tuple[int, int]) -> SystemInstance:
    """Restrict at both vertices of a non-adjacent pair, giving a (3,t-2)'-system."""
    u, v = pair
    if u == v or inst.host.has_edge(u, v):
        raise ValueError(f"[restrict_pair] {pair} is not an independent pair")
    first = restrict(inst, u)
    # v survives the first restriction since it is neither u nor a neighbour of u
    v_image = sum(1 for w in range(v) if w != u and not inst.host.rows[u] >> w & 1)
    return restrict(first, v_image)


def lift(inst: SystemInstance) -> SystemInstance:
    """
    Add an isolated vertex (the new last index) to the host and to every set.

    Any valid (3,t)'-system becomes a (3,t+1)-system whose sets all meet in
    the new vertex.

    Raises:
        ValueError: if r != 3 or the input is not a valid system.
    """
    if inst.r != 3:
        raise ValueError(f"[lift] needs r=3, got r={inst.r}")
    _require_valid(inst.with_changes(maximal=False), "lift")
    x = inst.m
    family = VertexSetFamily.of(
        (s + (x,) for s in inst.family.sets), inst.family.multiplicities
    )
    t = None if inst.t is None else inst.t + 1
    return SystemInstance(host=add_isolated(inst.host), family=family, r=3, t=t)


def cone_system(inst: SystemInstance, s: int) -> SystemInstance:
    """
    Cone the host s times; every set gains the s conical vertices.

    An (r,t)-system becomes an (r+s,t+s)-system and the maximality claim
    carries over.
    """
    if s < 0:
        raise ValueError(f"[cone_system] negative cone count {s}")
    if s == 0:
        return inst
    if inst.primed:
        raise ValueError("[cone_system] primed systems cannot be coned")
    _require_valid(inst, "cone_system")
    apex = tuple(range(inst.m, inst.m + s))
    family = VertexSetFamily.of((st + apex for st in inst.family.sets), inst.family.multiplicities)
    t = None if inst.t is None else inst.t + s
    return inst.with_changes(host=cone(inst.host, s), family=family, r=inst.r + s, t=t)


# ---------------------------------------------------------------------------
# Maximalization and clean-up
# ---------------------------------------------------------------------------

def _fill(host: Graph, family: VertexSetFamily, r: int) -> tuple[Graph, int]:
    """Add missing edges lexicographically while no K_r and no K_(r-1) inside a set appears."""
    rows = list(host.rows)
    masks = family.masks()
    member = membership_masks(host.n, masks)
    added = 0
    for u, v in host.missing_edges():
        common = rows[u] & rows[v]
        if has_clique(rows, common, r - 2):
            continue
        shared = member[u] & member[v]
        if shared and (r == 3 or any(has_clique(rows, masks[i] & common, r - 3) for i in iter_bits(shared))):
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        added += 1
    return Graph(host.n, tuple(rows)), added


def maximalize(inst: SystemInstance) -> SystemInstance:
    """
    Complete a valid system to a maximal one by adding host edges.

    Missing edges are tried once each in lexicographic order; an edge is
    added when the system stays valid. Edges only ever get harder to add, so
    the single pass leaves a maximal system.

    Raises:
        ValueError: if the input is not a valid system.
    """
    _require_valid(inst.with_changes(maximal=False), "maximalize")
    host, added = _fill(inst.host, inst.family, inst.r)
    logger.debug("maximalize %r: added %d edges", inst, added)
    return inst.with_changes(host=host, maximal=True)


def _cleanup_twins(inst: SystemInstance, counts: Sequence[int]) -> Optional[int]:
    seen: dict[int, int] = {}
    for v, row in enumerate(inst.host.rows):
        if counts[v]:
            continue
        if row in seen:
            return v
        seen[row] = v
    return None


def cleanup_step(inst: SystemInstance) -> SystemInstance:
    """
    Remove one host vertex from a maximal (r,t)-system.

    Twins v, w lying in no set are tried first and the larger one is
    dropped. Otherwise the lowest v with d(v) + s(v) <= t is dropped with all
    sets through it and the result is maximalized again.

    Raises:
        ValueError: if the system is not claimed maximal, t is unset, or
            neither clean-up property holds.
    """
    if not inst.maximal or inst.t is None:
        raise ValueError("[cleanup_step] needs a maximal system with t set")
    counts = inst.family.membership_counts(inst.m)
    twin = _cleanup_twins(inst, counts)
    if twin is not None:
        logger.debug("cleanup_step %r: dropping twin %d", inst, twin)
        return _drop_vertex(inst, twin)
    degrees = inst.host.degrees()
    for v in range(inst.m):
        if degrees[v] + counts[v] <= inst.t:
            logger.debug("cleanup_step %r: dropping low vertex %d", inst, v)
            smaller = _drop_vertex(inst, v).with_changes(maximal=False)
            return maximalize(smaller)
    raise ValueError(f"[cleanup_step] no twin pair outside the family and no vertex with d+s <= {inst.t}")


def cleanup(inst: SystemInstance) -> SystemInstance:
    """Apply cleanup_step until neither property holds."""
    steps = 0
    while cleanup_applies(inst):
        inst = cleanup_step(inst)
        steps += 1
    logger.debug("cleanup: %d steps, result %r", steps, inst)
    return inst


def cleanup_applies(inst: SystemInstance) -> bool:
    if not inst.maximal or inst.t is None:
        return False
    counts = inst.family.membership_counts(inst.m)
    if _cleanup_twins(inst, counts) is not None:
        return True
    return any(d + s <= inst.t for d, s in zip(inst.host.degrees(), counts))


# ---------------------------------------------------------------------------
# Growth
# ---------------------------------------------------------------------------

def grow_system(inst: SystemInstance, size: int) -> SystemInstance:
    """
    Grow a system to `size` host vertices by blowing up one vertex.

    The vertex v of least s(v) (lowest index on ties) is replaced by
    size - m + 1 non-adjacent copies and the sets through v are dropped, so at
    most a t/m fraction of the family is lost.
    """
    m = inst.m
    if size < m:
        raise ValueError(f"[grow_system] target {size} below host size {m}")
    if size == m:
        return inst
    if m == 0:
        raise ValueError("[grow_system] cannot grow an empty host")
    counts = inst.family.membership_counts(m)
    v = min(range(m), key=lambda u: (counts[u], u))
    extra = size - m
    mults = [1] * m
    mults[v] += extra
    host = blow_up(inst.host, mults)
    position = {u: (u if u < v else u + extra) for u in range(m) if u != v}
    keep = [i for i, s in enumerate(inst.family.sets) if v not in s]
    logger.debug("grow_system %r: blew up vertex %d, dropped %d sets", inst, v, len(inst.family) - len(keep))
    return inst.with_changes(host=host, family=_remap_family(inst.family, position, keep), maximal=False)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def system_canonical_form(inst: SystemInstance) -> bytes:
    """Canonical form of G(H, F) with host and family vertices coloured apart."""
    g = assemble(inst.host, inst.family)
    colours = [list(range(inst.m)), list(range(inst.m, g.n))]
    return canonical_form(g, colours)
