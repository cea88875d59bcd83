"""
K_r-freeness, K_r-saturation and the tsat witness predicate.
"""

from __future__ import annotations

import logging
from typing import Optional

from graphs.bits import find_clique, has_clique, iter_bits, lowest
from graphs.graph import Graph, twin_partition
from graphs.models import SaturationReport

logger = logging.getLogger(__name__)


def _check_r(r: int, where: str) -> None:
    if r < 3:
        raise ValueError(f"[{where}] r must be >= 3, got {r}")


def _first_unsaturated_pair_triangle(g: Graph) -> Optional[tuple[int, int]]:
    # A missing pair uv is fine iff v lies in the two-step reach of u.
    full = g.vertex_mask
    rows = g.rows
    for u, row in enumerate(rows):
        above = full >> (u + 1) << (u + 1)
        missing = above & ~row
        if not missing:
            continue
        reach = 0
        for w in iter_bits(row):
            reach |= rows[w]
        bad = missing & ~reach
        if bad:
            return u, lowest(bad)
    return None


def _first_unsaturated_pair(g: Graph, r: int) -> Optional[tuple[int, int]]:
    if r == 3:
        return _first_unsaturated_pair_triangle(g)
    rows = g.rows
    for u, v in g.missing_edges():
        if not has_clique(rows, rows[u] & rows[v], r - 2):
            return u, v
    return None


def saturation_report(g: Graph, r: int) -> SaturationReport:
    """
    Check whether g is K_r-free and K_r-saturated.

    Args:
        g: Graph to check.
        r: Clique size, at least 3.

    Returns:
        SaturationReport with a clique witness when g contains K_r, otherwise
        the lexicographically first missing edge that creates no K_r (if any).

    Raises:
        ValueError: if r < 3.
    """
    _check_r(r, "saturation_report")
    clique = find_clique(g.rows, g.vertex_mask, r)
    if clique is not None:
        return SaturationReport(r=r, is_free=False, is_saturated=False, clique_witness=clique)
    pair = _first_unsaturated_pair(g, r)
    return SaturationReport(r=r, is_free=True, is_saturated=pair is None, violating_pair=pair)


def is_saturated(g: Graph, r: int) -> bool:
    return saturation_report(g, r).is_saturated


def saturate(g: Graph, r: int) -> Graph:
    """
    Complete a K_r-free graph to a K_r-saturated supergraph.

    Missing pairs are scanned in lexicographic order and each is added when
    the graph stays K_r-free, so the result is deterministic.

    Raises:
        ValueError: if g already contains K_r.
    """
    _check_r(r, "saturate")
    clique = find_clique(g.rows, g.vertex_mask, r)
    if clique is not None:
        raise ValueError(f"[saturate] graph contains K_{r} on {clique}")
    rows = list(g.rows)
    added = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if rows[u] >> v & 1:
                continue
            if not has_clique(rows, rows[u] & rows[v], r - 2):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                added += 1
    logger.debug("saturate: added %d edges to %r", added, g)
    return Graph(g.n, tuple(rows))


def is_tsat_witness(g: Graph, r: int, t: Optional[int] = None) -> bool:
    """
    Witness predicate for tsat(n, K_r) and tsat(n, K_r, t).

    Without t: g is K_r-saturated and twin-free. With t: g is K_r-saturated,
    has minimum degree at least t and every twin pair has a common neighbour
    of degree exactly t.
    """
    _check_r(r, "is_tsat_witness")
    if t is not None and t < r - 2:
        raise ValueError(f"[is_tsat_witness] t={t} below r-2={r - 2}")
    if not is_saturated(g, r):
        return False
    partition = twin_partition(g)
    if t is None:
        return partition.is_twin_free
    degrees = g.degrees()
    if g.n and min(degrees) < t:
        return False
    degree_t = 0
    for v, d in enumerate(degrees):
        if d == t:
            degree_t |= 1 << v
    for cls_ in partition.classes:
        # twins share their neighbourhood, so one row serves the whole class
        if len(cls_) > 1 and not g.rows[cls_[0]] & degree_t:
            return False
    return True
