"""
Bit-row helpers shared by every package.

Vertex sets are Python ints: bit v set means vertex v is in the set.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence


def lowest(mask: int) -> int:
    """Index of the lowest set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit indices in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def colour_order(rows: Sequence[int], candidates: int) -> tuple[list[int], list[int]]:
    """
    Greedy colouring of the candidate set.

    Returns vertices in colour-class order together with the colour number
    of each, so bounds[i] bounds the clique size within order[:i+1].
    """
    order: list[int] = []
    bounds: list[int] = []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            v = lowest(available)
            available &= ~rows[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def find_clique(rows: Sequence[int], candidates: int, k: int) -> Optional[list[int]]:
    """
    Find k pairwise-adjacent vertices inside the candidate set.

    Branches over the candidates from the last colour class down, cutting as
    soon as the greedy colouring of what is left uses fewer than k colours.

    Returns:
        Sorted vertex list of a clique, or None when no clique exists.
    """
    if k <= 0:
        return []
    if candidates.bit_count() < k:
        return None
    if k == 1:
        return [lowest(candidates)]
    if k == 2:
        cand = candidates
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            hit = rows[v] & cand
            if hit:
                return [v, lowest(hit)]
        return None

    order, bounds = colour_order(rows, candidates)
    cand = candidates
    for i in range(len(order) - 1, -1, -1):
        # cand is order[:i+1] here
        if bounds[i] < k:
            return None
        v = order[i]
        sub = find_clique(rows, cand & rows[v], k - 1)
        if sub is not None:
            return sorted([v] + sub)
        cand &= ~(1 << v)
    return None


def has_clique(rows: Sequence[int], candidates: int, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return candidates != 0
    return find_clique(rows, candidates, k) is not None
