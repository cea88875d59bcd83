"""
Upper-bound witnesses: large twin-free K_3-saturated graphs, extremal
(3,4)- and (3,5)-systems, saturated graphs of prescribed minimum degree and
primed systems with many sets.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb

from constructions.families import ConstructionParams, family_size, host_size, lifted_family, system_family
from graphs.bits import has_clique, iter_bits
from graphs.graph import Graph, make_graph
from systems.checks import check_maximal, membership_masks
from systems.models import SystemInstance, VertexSetFamily
from systems.operations import assemble, cleanup, cone_system, grow_system, lift, maximalize

logger = logging.getLogger(__name__)


# excess e(G) - t*n is measured against n to this power
WITNESS_EXPONENT = 0.8


class InfeasibleError(ValueError):
    """The requested witness cannot be built at these parameters; the message names the binding constraint."""


# ---------------------------------------------------------------------------
# Subfamily selection
# ---------------------------------------------------------------------------

def _lex_order(family: VertexSetFamily) -> list[int]:
    return sorted(range(len(family)), key=lambda i: family.sets[i])


def needed_edges(inst: SystemInstance) -> list[tuple[int, int]]:
    """Missing host edges whose addition keeps the host K_r-free."""
    rows = inst.host.rows
    return [
        (u, v)
        for u, v in inst.host.missing_edges()
        if not has_clique(rows, rows[u] & rows[v], inst.r - 2)
    ]


def cover_first_subfamily(inst: SystemInstance, size: int) -> VertexSetFamily:
    """
    Pick `size` sets so that the subsystem stays maximal.

    Needed edges are scanned in lexicographic order; each one not yet covered
    takes the lexicographically least set that covers it. Remaining room is
    filled with the lexicographically least unused sets.

    Raises:
        InfeasibleError: if some needed edge has no covering set, the cover
            needs more than `size` sets, or the family has fewer than `size` sets.
    """
    family = inst.family
    if size > len(family):
        raise InfeasibleError(f"[cover_first_subfamily] need {size} sets, family has {len(family)}")
    order = _lex_order(family)
    sets = [family.sets[i] for i in order]
    all_masks = family.masks()
    masks = [all_masks[i] for i in order]
    member = membership_masks(inst.m, masks)
    rows = inst.host.rows
    chosen = 0
    needed = needed_edges(inst)
    for u, v in needed:
        candidates = member[u] & member[v]
        if inst.r > 3:
            common = rows[u] & rows[v]
            candidates = sum(1 << i for i in iter_bits(candidates) if has_clique(rows, masks[i] & common, inst.r - 3))
        if candidates & chosen:
            continue
        if not candidates:
            raise InfeasibleError(f"[cover_first_subfamily] missing edge ({u}, {v}) lies in no family set")
        chosen |= candidates & -candidates
    cover = chosen.bit_count()
    if cover > size:
        raise InfeasibleError(f"[cover_first_subfamily] cover needs {cover} sets, budget is {size}")
    unused = ~chosen & ((1 << len(sets)) - 1)
    while chosen.bit_count() < size:
        pick = unused & -unused
        chosen |= pick
        unused ^= pick
    logger.info(
        "cover_first_subfamily: %d needed edges, %d covering sets, %d total", len(needed), cover, size
    )
    return VertexSetFamily.of(sets[i] for i in iter_bits(chosen))


def degree_first_subfamily(inst: SystemInstance, size: int, cap: int) -> VertexSetFamily:
    """
    Pick `size` sets with s'(v) >= min(s(v), cap) for every host vertex.

    Vertices are served in order of descending s(v) (lowest index on ties),
    each taking the lexicographically least unused sets through it; the rest is
    filled lexicographically.

    Raises:
        InfeasibleError: if the degree requirement alone needs more than `size` sets.
    """
    family = inst.family
    if size > len(family):
        raise InfeasibleError(f"[degree_first_subfamily] need {size} sets, family has {len(family)}")
    order = _lex_order(family)
    sets = [family.sets[i] for i in order]
    all_masks = family.masks()
    member = membership_masks(inst.m, [all_masks[i] for i in order])
    counts = [mask.bit_count() for mask in member]
    chosen = 0
    for v in sorted(range(inst.m), key=lambda u: (-counts[u], u)):
        want = min(counts[v], cap)
        have = (member[v] & chosen).bit_count()
        spare = member[v] & ~chosen
        while have < want:
            pick = spare & -spare
            chosen |= pick
            spare ^= pick
            have += 1
    if chosen.bit_count() > size:
        raise InfeasibleError(
            f"[degree_first_subfamily] degree requirement needs {chosen.bit_count()} sets, budget is {size}"
        )
    unused = ~chosen & ((1 << len(sets)) - 1)
    while chosen.bit_count() < size:
        pick = unused & -unused
        chosen |= pick
        unused ^= pick
    return VertexSetFamily.of(sets[i] for i in iter_bits(chosen))


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

def fifth_root_ceil(n: int) -> int:
    l = max(1, round(n ** 0.2))
    while l ** 5 < n:
        l += 1
    while l > 1 and (l - 1) ** 5 >= n:
        l -= 1
    return l


def tsat_upper_witness(n: int) -> Graph:
    """
    Twin-free K_3-saturated graph on n vertices with minimum degree 6.

    Built from the maximal (3,6)-system on H'_{5,l}, l = ceil(n^(1/5)), by
    keeping n - 5l^2 - 1 of its sets and assembling.

    Raises:
        InfeasibleError: if n is too small for the needed edges to be covered.
    """
    l = fifth_root_ceil(n)
    if l < 3:
        raise InfeasibleError(f"[tsat_upper_witness] n={n} gives l={l}; the lift needs l >= 3 to be maximal")
    p = ConstructionParams(t=5, l=l)
    budget = n - host_size(p) - 1
    if budget < 6:
        raise InfeasibleError(f"[tsat_upper_witness] n={n} leaves only {budget} family vertices")
    lifted = lifted_family(p)
    if not lifted.maximal:
        raise InfeasibleError(f"[tsat_upper_witness] lift at l={l} is not maximal")
    family = cover_first_subfamily(lifted, budget)
    g = assemble(lifted.host, family)
    logger.info(
        "tsat_upper_witness(%d): l=%d, host %d vertices, %d sets, e=%d", n, l, lifted.m, budget, g.edge_count
    )
    return g


def e34_upper_witness(s: int) -> SystemInstance:
    """
    Maximal (3,4)-system with exactly s sets.

    Take the least l with C(l,2) >= s, X = {0..l-1} and s pairs P of X as
    further vertices, P adjacent to every x outside P. The sets {x, y, P}
    form a (3,3)'-system; its lift is maximalized.

    Raises:
        ValueError: if s < 1.
    """
    if s < 1:
        raise ValueError(f"[e34_upper_witness] s must be >= 1, got {s}")
    l = 2
    while comb(l, 2) < s:
        l += 1
    pairs = list(combinations(range(l), 2))[:s]
    edges = [(x, l + j) for j, pair in enumerate(pairs) for x in range(l) if x not in pair]
    host = make_graph(l + s, edges)
    sets = [(x, y, l + j) for j, (x, y) in enumerate(pairs)]
    base = SystemInstance(host=host, family=VertexSetFamily.of(sets), r=3, t=3, primed=True)
    inst = maximalize(lift(base))
    logger.info("e34_upper_witness(%d): l=%d, e(H)=%d", s, l, inst.host.edge_count)
    return inst


def e35_upper_witness(s: int) -> SystemInstance:
    """
    Maximal (3,5)-system with exactly s sets on H'_{4,l}.

    l is the least value >= 3 with l^2(l-1)^2/2 >= s; sets are chosen
    cover-first.

    Raises:
        InfeasibleError: if the needed edges cannot be covered with s sets.
    """
    if s < 1:
        raise ValueError(f"[e35_upper_witness] s must be >= 1, got {s}")
    l = 3
    while family_size(ConstructionParams(t=4, l=l)) < s:
        l += 1
    lifted = lifted_family(ConstructionParams(t=4, l=l))
    family = cover_first_subfamily(lifted, s)
    inst = lifted.with_changes(family=family, maximal=False)
    report = check_maximal(inst)
    if not report.is_maximal:
        raise InfeasibleError(f"[e35_upper_witness] s={s} leaves edge {report.violating_edge} unfilled")
    inst = inst.with_changes(maximal=True)
    logger.info("e35_upper_witness(%d): l=%d, e(H)=%d", s, l, inst.host.edge_count)
    return inst


def tsat_min_deg_upper_witness(n: int, r: int, t: int) -> Graph:
    """
    K_r-saturated graph on n vertices with minimum degree at least t whose
    twin pairs all see a vertex of degree t.

    Pipeline: seed with the lifted H_{t-r+2,l} system coned r-3 times, clean
    up, keep N = n - m' sets with s'(v) >= min(s(v), t+1), maximalize and
    assemble. l is the least value whose seed is maximal with enough sets.

    Raises:
        ValueError: if r < 3 or t < r+3.
        InfeasibleError: if no scale l satisfies the size requirements.
    """
    if r < 3:
        raise ValueError(f"[tsat_min_deg_upper_witness] r must be >= 3, got {r}")
    if t < r + 3:
        raise ValueError(f"[tsat_min_deg_upper_witness] need t >= r+3, got t={t}, r={r}")
    base_t = t - r + 2
    l = 2
    while True:
        p = ConstructionParams(t=base_t, l=l)
        m = host_size(p) + 1 + (r - 3)
        if m >= n:
            raise InfeasibleError(f"[tsat_min_deg_upper_witness] host at l={l} already has {m} >= n={n} vertices")
        if family_size(p) >= n - m:
            lifted = lifted_family(p)
            if lifted.maximal:
                break
        l += 1
    seed = cone_system(lifted, r - 3)
    cleaned = cleanup(seed)
    m_clean = cleaned.m
    budget = n - m_clean
    if (t + 1) * m_clean > budget:
        raise InfeasibleError(
            f"[tsat_min_deg_upper_witness] (t+1)*m'={(t + 1) * m_clean} exceeds n-m'={budget}"
        )
    family = degree_first_subfamily(cleaned, budget, t + 1)
    system = maximalize(cleaned.with_changes(family=family, maximal=False))
    g = assemble(system.host, family)
    logger.info(
        "tsat_min_deg_upper_witness(%d, %d, %d): l=%d, host %d vertices, %d sets, e - tn = %d",
        n, r, t, l, m_clean, budget, g.edge_count, g.edge_count - t * n,
    )
    return g


def many_sets_witness(m: int) -> SystemInstance:
    """
    (3,3)'-system on m vertices from H_{3,l}, l = floor(m/2), grown to m
    vertices; it keeps at least 2l - 3 of the 2l sets.
    """
    if m < 6:
        raise ValueError(f"[many_sets_witness] need m >= 6, got {m}")
    base = system_family(ConstructionParams(t=3, l=m // 2))
    return grow_system(base, m)


def excess_constant(g: Graph, t: int, exponent: float) -> float:
    """(e(G) - t*n) / n^exponent."""
    if g.n == 0:
        return 0.0
    return (g.edge_count - t * g.n) / g.n ** exponent


def witness_excess(g: Graph, t: int) -> tuple[int, float]:
    """e(G) - t*n and the constant C with e(G) - t*n = C * n^(4/5)."""
    return g.edge_count - t * g.n, excess_constant(g, t, WITNESS_EXPONENT)
