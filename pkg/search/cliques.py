"""
Clique search on bit-row graphs: maximum clique by branch and bound with a
greedy colouring bound, and exhaustive clique listing.
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional, Sequence

from graphs.bits import colour_order, iter_bits
from search.models import BudgetTracker

logger = logging.getLogger(__name__)


class _Found(Exception):
    pass


def max_clique(
    rows: Sequence[int],
    candidates: int,
    tracker: Optional[BudgetTracker] = None,
    target: Optional[int] = None,
) -> list[int]:
    """
    Maximum clique inside `candidates`.

    With a target the search stops as soon as a clique of that size is
    found and returns it; a returned clique shorter than the target means
    none exists.

    Raises:
        BudgetExceeded: when the tracker's clique-node cap is hit.
    """
    best: list[int] = []
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        if tracker is not None:
            tracker.charge_clique_nodes()
        order, bounds = colour_order(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            sub = cand & rows[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = sorted(current)
                if target is not None and len(best) >= target:
                    raise _Found
            current.pop()
            cand &= ~(1 << v)

    if target is not None and target <= 0:
        return []
    try:
        expand(candidates)
    except _Found:
        pass
    return best


def iter_cliques(
    rows: Sequence[int],
    candidates: int,
    size: Optional[int] = None,
    tracker: Optional[BudgetTracker] = None,
) -> Iterator[list[int]]:
    """
    Every nonempty clique inside `candidates` (only those of `size` when given),
    as sorted vertex lists in lexicographic order.
    """

    def walk(chosen: list[int], cand: int) -> Iterator[list[int]]:
        if tracker is not None:
            tracker.charge_clique_nodes()
        for v in iter_bits(cand):
            clique = chosen + [v]
            if size is None or len(clique) == size:
                yield clique
            if size is None or len(clique) < size:
                later = cand & rows[v] & ~((1 << (v + 1)) - 1)
                if size is None or later.bit_count() >= size - len(clique):
                    yield from walk(clique, later)

    yield from walk([], candidates)
