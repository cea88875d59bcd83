"""
Immutable simple graphs over vertices 0..n-1 stored as neighbour bit rows,
plus the structural operations the rest of the library builds on.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from graphs.bits import find_clique, full_mask, iter_bits, to_mask
from graphs.models import BlowUpSpec, TwinPartition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph.

    rows[v] is the bit mask of Γ(v). Instances are immutable and hashable;
    every operation returns a new Graph.
    """

    n: int
    rows: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"[Graph] {len(self.rows)} rows for n={self.n}")
        object.__setattr__(self, "edge_count", sum(r.bit_count() for r in self.rows) // 2)

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.rows):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def missing_edges(self) -> Iterator[tuple[int, int]]:
        """Non-adjacent pairs (u, v) with u < v in lexicographic order."""
        full = self.vertex_mask
        for u, row in enumerate(self.rows):
            above = full >> (u + 1) << (u + 1)
            yield from ((u, v) for v in iter_bits(above & ~row))

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex perm[v] plays the role of old vertex v."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"[relabel] not a permutation of 0..{self.n - 1}")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = to_mask(perm[u] for u in iter_bits(row))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def _check_pair(n: int, u: int, v: int, where: str) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"[{where}] pair ({u}, {v}) out of range for n={n}")
    if u == v:
        raise ValueError(f"[{where}] loop pair ({u}, {v})")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Build a graph from an edge list; duplicate pairs collapse.

    Raises:
        ValueError: on a negative vertex count, an endpoint out of range or a loop.
    """
    if n < 0:
        raise ValueError(f"[make_graph] negative vertex count {n}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v, "make_graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = full_mask(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"[cycle_graph] need n >= 3, got {n}")
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


# ---------------------------------------------------------------------------
# Structural operations
# ---------------------------------------------------------------------------

def contains_clique(g: Graph, k: int) -> bool:
    """True iff g has k pairwise-adjacent vertices."""
    if k < 0:
        raise ValueError(f"[contains_clique] negative clique size {k}")
    if k <= 1:
        return g.n >= k
    return find_clique(g.rows, g.vertex_mask, k) is not None


def twin_partition(g: Graph) -> TwinPartition:
    groups: dict[int, list[int]] = {}
    for v, row in enumerate(g.rows):
        groups.setdefault(row, []).append(v)
    classes = sorted((tuple(members) for members in groups.values()), key=lambda c: c[0])
    return TwinPartition(classes=tuple(classes))


def is_twin_free(g: Graph) -> bool:
    return len(set(g.rows)) == g.n


def blow_up(g: Graph, spec: BlowUpSpec | Sequence[int]) -> Graph:
    """
    Replace each vertex v by spec[v] pairwise non-adjacent copies.

    Copies of v occupy a consecutive block, blocks ordered by v.
    """
    if not isinstance(spec, BlowUpSpec):
        spec = BlowUpSpec(multiplicities=tuple(spec))
    mults = spec.multiplicities
    if len(mults) != g.n:
        raise ValueError(f"[blow_up] spec length {len(mults)} != n={g.n}")
    starts = []
    total = 0
    for mult in mults:
        starts.append(total)
        total += mult
    blocks = [full_mask(m) << s for m, s in zip(mults, starts)]
    rows: list[int] = []
    for v, row in enumerate(g.rows):
        image = 0
        for u in iter_bits(row):
            image |= blocks[u]
        rows.extend([image] * mults[v])
    return Graph(total, tuple(rows))


def twin_quotient(g: Graph) -> tuple[Graph, BlowUpSpec]:
    """Collapse twin classes; blow_up of the result is isomorphic to g."""
    partition = twin_partition(g)
    index = {}
    for i, cls_ in enumerate(partition.classes):
        for v in cls_:
            index[v] = i
    k = len(partition.classes)
    rows = [0] * k
    for i, cls_ in enumerate(partition.classes):
        rows[i] = to_mask(index[u] for u in iter_bits(g.rows[cls_[0]]))
    spec = BlowUpSpec(multiplicities=tuple(len(c) for c in partition.classes))
    return Graph(k, tuple(rows)), spec


def cone(g: Graph, s: int) -> Graph:
    """Add s conical vertices (adjacent to everything, including each other)."""
    if s < 0:
        raise ValueError(f"[cone] negative cone count {s}")
    n = g.n + s
    apex = full_mask(n) ^ g.vertex_mask
    rows = [row | apex for row in g.rows]
    full = full_mask(n)
    rows.extend(full & ~(1 << v) for v in range(g.n, n))
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, relabelled 0..k-1 in increasing order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"[induced] vertex {v} out of range for n={g.n}")
    position = {v: i for i, v in enumerate(keep)}
    keep_mask = to_mask(keep)
    rows = tuple(to_mask(position[u] for u in iter_bits(g.rows[v] & keep_mask)) for v in keep)
    return Graph(len(keep), rows)


def add_isolated(g: Graph, count: int = 1) -> Graph:
    return Graph(g.n + count, g.rows + (0,) * count)
