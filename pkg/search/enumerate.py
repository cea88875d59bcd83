"""
Isomorphism-free enumeration of graphs in hereditary classes.

Level n is built from the canonical representatives of level n-1: every
admissible neighbourhood for a new last vertex is tried and the results are
deduplicated by canonical form. Filters must be closed under vertex
deletion, which makes the levels complete. Levels are cached per
(filter, n) for the life of the process.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from graphs.bits import has_clique
from graphs.canonical import canonical_form
from graphs.graph import Graph
from graphs.graph6 import decode_graph6
from search.models import BudgetTracker
from search.pool import chunked, parallel_map

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Hereditary filters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphFilter:
    """Accept-all filter; subclasses restrict the new vertex's neighbourhood."""

    def allows(self, g: Graph, chosen: int, v: int) -> bool:
        """May v join the neighbourhood `chosen` of the new vertex? Must be monotone in chosen."""
        return True

    @property
    def triangle_free(self) -> bool:
        return False


@dataclass(frozen=True)
class CliqueFree(GraphFilter):
    """Graphs with no K_k."""

    k: int = 3

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"[CliqueFree] k must be >= 2, got {self.k}")

    def allows(self, g: Graph, chosen: int, v: int) -> bool:
        # the new vertex plus a K_(k-1) inside its neighbourhood would be a K_k
        return not has_clique(g.rows, chosen & g.rows[v], self.k - 2)

    @property
    def triangle_free(self) -> bool:
        return self.k <= 3


@dataclass(frozen=True)
class EdgeCap(GraphFilter):
    """Graphs with at most `edges` edges."""

    edges: int = 0

    def allows(self, g: Graph, chosen: int, v: int) -> bool:
        return g.edge_count + chosen.bit_count() + 1 <= self.edges


@dataclass(frozen=True)
class AllOf(GraphFilter):
    parts: tuple[GraphFilter, ...] = ()

    def allows(self, g: Graph, chosen: int, v: int) -> bool:
        return all(p.allows(g, chosen, v) for p in self.parts)

    @property
    def triangle_free(self) -> bool:
        return any(p.triangle_free for p in self.parts)


NO_FILTER = GraphFilter()


# ---------------------------------------------------------------------------
# Extension
# ---------------------------------------------------------------------------

def admissible_neighbourhoods(g: Graph, filt: GraphFilter) -> Iterator[int]:
    """Every neighbourhood mask over 0..n-1 the filter allows for a new vertex n."""

    def walk(v: int, chosen: int) -> Iterator[int]:
        if v == g.n:
            yield chosen
            return
        yield from walk(v + 1, chosen)
        if filt.allows(g, chosen, v):
            yield from walk(v + 1, chosen | (1 << v))

    yield from walk(0, 0)


def _extend(g: Graph, mask: int) -> Graph:
    n = g.n
    rows = list(g.rows)
    for u in range(n):
        if mask >> u & 1:
            rows[u] |= 1 << n
    rows.append(mask)
    return Graph(n + 1, tuple(rows))


def _extend_chunk(task: tuple[list[bytes], GraphFilter]) -> tuple[set[bytes], int]:
    """Worker: canonical forms of all admissible one-vertex extensions, and how many were tried."""
    forms, filt = task
    found: set[bytes] = set()
    tried = 0
    for form in forms:
        g = decode_graph6(form)
        for mask in admissible_neighbourhoods(g, filt):
            tried += 1
            found.add(canonical_form(_extend(g, mask)))
    return found, tried


_LEVELS: dict[tuple[GraphFilter, int], tuple[bytes, ...]] = {}


def _level(n: int, filt: GraphFilter, tracker: BudgetTracker, workers: int) -> tuple[bytes, ...]:
    key = (filt, n)
    if key in _LEVELS:
        return _LEVELS[key]
    if n == 0:
        forms: tuple[bytes, ...] = (canonical_form(Graph(0, ())),)
    else:
        parents = list(_level(n - 1, filt, tracker, workers))
        tasks = [(chunk, filt) for chunk in chunked(parents, workers)]
        found: set[bytes] = set()
        for part, tried in parallel_map(_extend_chunk, tasks, workers):
            found |= part
            tracker.charge_candidates(tried)
        forms = tuple(sorted(found))
        logger.info("enumerate: n=%d, %r, %d classes from %d parents", n, filt, len(forms), len(parents))
    _LEVELS[key] = forms
    return forms


def enumerate_graphs(
    n: int,
    filt: GraphFilter = NO_FILTER,
    tracker: Optional[BudgetTracker] = None,
    workers: int = 1,
) -> list[Graph]:
    """
    One graph per isomorphism class on n vertices passing the filter.

    Graphs come in canonical labeling, sorted by canonical form.

    Raises:
        BudgetExceeded: if n is above the vertex cap or the level build
            exceeds the candidate or time caps.
    """
    if n < 0:
        raise ValueError(f"[enumerate_graphs] negative vertex count {n}")
    tracker = tracker or BudgetTracker()
    tracker.require_vertices(n, filt.triangle_free)
    return [decode_graph6(form) for form in _level(n, filt, tracker, workers)]


def clear_cache() -> None:
    _LEVELS.clear()
