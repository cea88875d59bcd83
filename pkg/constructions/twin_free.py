"""
Twin-free K_r-saturated graphs on n vertices, for every (n, r) where one exists.
"""

from __future__ import annotations

import logging

from constructions.shattering import shattering_set
from constructions.small import named_small
from graphs.graph import Graph, complete_graph, cone, make_graph

logger = logging.getLogger(__name__)


class NonexistentError(ValueError):
    """No twin-free K_r-saturated graph exists; case names the excluded family."""

    def __init__(self, n: int, r: int, case: str) -> None:
        super().__init__(f"[twin_free_saturated] no twin-free K_{r}-saturated graph on {n} vertices ({case})")
        self.n = n
        self.r = r
        self.case = case


def exception_case(n: int, r: int) -> str | None:
    """Name of the nonexistence case (n, r) falls in, or None."""
    if n == r:
        return "n=r"
    if n == r + 1:
        return "n=r+1"
    if r == 3 and n in (6, 7):
        return f"r=3,n={n}"
    return None


def matching_size(size: int) -> int:
    """Smallest k with 2^k + 2k + 1 >= size."""
    k = 1
    while 2 ** k + 2 * k + 1 < size:
        k += 1
    return k


def shattering_graph(size: int) -> Graph:
    """
    Twin-free K_3-saturated graph on `size` vertices (size >= 9, size != 10).

    Vertices 2i and 2i+1 are the matched pair (i,0), (i,1); then come the
    sequence vertices x, each adjacent to (i, x_i); the last vertex is
    adjacent to every sequence vertex.
    """
    if size < 9 or size == 10:
        raise ValueError(f"[shattering_graph] size must be >= 9 and != 10, got {size}")
    k = matching_size(size)
    count = size - 2 * k - 1
    seqs = shattering_set(k, count).sequences
    logger.debug("shattering_graph(%d): k=%d, %d sequences", size, k, count)
    edges = [(2 * i, 2 * i + 1) for i in range(k)]
    first = 2 * k
    apex = size - 1
    for j, x in enumerate(seqs):
        edges.extend((2 * i + bit, first + j) for i, bit in enumerate(x))
        edges.append((first + j, apex))
    return make_graph(size, edges)


def twin_free_saturated(n: int, r: int) -> Graph:
    """
    A twin-free K_r-saturated graph on n vertices.

    Below r the answer is K_n. Otherwise a twin-free K_3-saturated (or, for
    two small sizes, K_4-saturated) core on n-r+3 (or n-r+4) vertices is
    coned up to r.

    Raises:
        ValueError: if r < 3 or n < 0.
        NonexistentError: for n=r, n=r+1 and, when r=3, n=6 and n=7.
    """
    if r < 3:
        raise ValueError(f"[twin_free_saturated] r must be >= 3, got {r}")
    if n < 0:
        raise ValueError(f"[twin_free_saturated] negative vertex count {n}")
    if n < r:
        return complete_graph(n)
    case = exception_case(n, r)
    if case is not None:
        raise NonexistentError(n, r, case)
    core_size = n - r + 3
    if core_size == 5:
        core, cones = named_small("c5"), r - 3
    elif core_size == 6:
        core, cones = named_small("c7_complement"), r - 4
    elif core_size == 7:
        core, cones = named_small("c8_two_chords_complement"), r - 4
    elif core_size == 8:
        core, cones = named_small("wagner"), r - 3
    elif core_size == 10:
        core, cones = named_small("petersen"), r - 3
    else:
        core, cones = shattering_graph(core_size), r - 3
    logger.debug("twin_free_saturated(%d, %d): core %r coned %d times", n, r, core, cones)
    return cone(core, cones)
