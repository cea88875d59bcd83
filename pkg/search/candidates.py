"""
Candidate sets and compatibility graphs for system searches.

A system on a fixed host is a clique in the compatibility graph whose
vertices are the maximally K_(r-1)-free t-sets of the host, two sets being
compatible when their intersection contains K_(r-2).
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

from graphs.bits import full_mask, has_clique, iter_bits, to_list
from graphs.graph import Graph
from search.cliques import iter_cliques
from search.enumerate import CliqueFree, enumerate_graphs
from search.models import BudgetTracker
from systems.models import SystemInstance, VertexSetFamily

logger = logging.getLogger(__name__)


def maximal_free_sets(
    host: Graph,
    r: int,
    size: Optional[int] = None,
    tracker: Optional[BudgetTracker] = None,
) -> list[int]:
    """
    All maximally K_(r-1)-free vertex sets of the host (of the given size).

    Backtracks over vertices in index order, including each vertex when the
    set stays K_(r-1)-free. A branch dies as soon as some excluded vertex can
    no longer complete a K_(r-1) with the chosen and undecided vertices.

    Returns:
        Set masks sorted by their vertex lists.
    """
    rows = host.rows
    n = host.n
    need = r - 2
    full = full_mask(n)
    out: list[int] = []

    def walk(v: int, chosen: int, excluded: int) -> None:
        count = chosen.bit_count()
        if size is not None and (count > size or count + n - v < size):
            return
        if tracker is not None:
            tracker.charge_candidates()
        undecided = full >> v << v
        reach = chosen | undecided
        for u in iter_bits(excluded):
            if not has_clique(rows, reach & rows[u], need):
                return
        if v == n:
            out.append(chosen)
            return
        if not has_clique(rows, chosen & rows[v], need):
            walk(v + 1, chosen | (1 << v), excluded)
        walk(v + 1, chosen, excluded | (1 << v))

    walk(0, 0, 0)
    out.sort(key=to_list)
    return out


def compatibility_rows(host: Graph, sets: list[int], r: int, primed: bool = False) -> list[int]:
    """Adjacency rows over set indices: i ~ j when H[S_i ∩ S_j] contains K_(r-2)."""
    k = len(sets)
    if primed:
        full = full_mask(k)
        return [full & ~(1 << i) for i in range(k)]
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if has_clique(host.rows, sets[i] & sets[j], r - 2):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def family_of(sets: list[int], indices: list[int]) -> VertexSetFamily:
    return VertexSetFamily.of(to_list(sets[i]) for i in indices)


def systems_on_host(
    host: Graph,
    r: int,
    t: int,
    primed: bool = False,
    tracker: Optional[BudgetTracker] = None,
) -> Iterator[SystemInstance]:
    """Every nonempty (r,t)-system (or (3,t)'-system) with this host, families in lexicographic order."""
    sets = maximal_free_sets(host, r, t, tracker)
    if not sets:
        return
    compat = compatibility_rows(host, sets, r, primed)
    for clique in iter_cliques(compat, full_mask(len(sets)), tracker=tracker):
        yield SystemInstance(host=host, family=family_of(sets, clique), r=r, t=t, primed=primed)


def iter_systems(
    m: int,
    r: int,
    t: int,
    primed: bool = False,
    tracker: Optional[BudgetTracker] = None,
    workers: int = 1,
) -> Iterator[SystemInstance]:
    """
    Every nonempty (r,t)-system on every K_r-free host with m vertices, one host
    per isomorphism class.

    Raises:
        BudgetExceeded: through the tracker.
    """
    tracker = tracker or BudgetTracker()
    for host in enumerate_graphs(m, CliqueFree(r), tracker, workers):
        tracker.charge_host()
        yield from systems_on_host(host, r, t, primed, tracker)
