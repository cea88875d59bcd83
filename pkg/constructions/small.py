"""
The extremal graph for sat(n, K_r) and the five sporadic twin-free
saturated graphs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from graphs.graph import Graph, complement, cone, cycle_graph, empty_graph, make_graph


def ehm_graph(n: int, r: int) -> Graph:
    """
    K_(r-2) joined to an independent set of n-(r-2) vertices.

    The independent set comes first (vertices 0..n-r+1), the clique last.

    Raises:
        ValueError: if r < 3 or n < r-2.
    """
    if r < 3:
        raise ValueError(f"[ehm_graph] r must be >= 3, got {r}")
    if n < r - 2:
        raise ValueError(f"[ehm_graph] need n >= r-2={r - 2}, got n={n}")
    return cone(empty_graph(n - (r - 2)), r - 2)


def c5() -> Graph:
    return cycle_graph(5)


def c7_complement() -> Graph:
    return complement(cycle_graph(7))


def c8_two_chords_complement() -> Graph:
    chords = [(0, 4), (1, 5)]
    ring = [(i, (i + 1) % 8) for i in range(8)]
    return complement(make_graph(8, ring + chords))


def wagner() -> Graph:
    ring = [(i, (i + 1) % 8) for i in range(8)]
    diameters = [(i, i + 4) for i in range(4)]
    return make_graph(8, ring + diameters)


def petersen() -> Graph:
    """Disjointness graph of the 2-subsets of a 5-set, subsets in lexicographic order."""
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return make_graph(len(pairs), edges)


# name -> (builder, r for which the graph is twin-free and K_r-saturated)
NAMED_SMALL: dict[str, tuple[Callable[[], Graph], int]] = {
    "c5": (c5, 3),
    "c7_complement": (c7_complement, 4),
    "c8_two_chords_complement": (c8_two_chords_complement, 4),
    "wagner": (wagner, 3),
    "petersen": (petersen, 3),
}


def named_small(name: str) -> Graph:
    """
    Build a sporadic graph by name.

    Raises:
        KeyError: if the name is not one of NAMED_SMALL.
    """
    try:
        builder, _ = NAMED_SMALL[name]
    except KeyError:
        raise KeyError(f"[named_small] unknown graph {name!r}; known: {sorted(NAMED_SMALL)}") from None
    return builder()


def advertised_r(name: str) -> int:
    return NAMED_SMALL[name][1]
