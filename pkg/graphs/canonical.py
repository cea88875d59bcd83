"""
Canonical labeling by equitable partition refinement and an
individualise-refine search tree with automorphism pruning.

canonical_form(g) is the graph6 encoding of g relabelled by the canonical
labeling, so two graphs get equal forms exactly when they are isomorphic.
An optional ordered colouring restricts the labeling to colour-preserving
isomorphisms.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from graphs.bits import iter_bits, to_mask
from graphs.graph import Graph
from graphs.graph6 import encode_graph6

logger = logging.getLogger(__name__)

Cells = list[list[int]]


def _refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until equitable."""
    while True:
        masks = [to_mask(c) for c in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(signature.values()))
            if len(keys) == 1:
                refined.append(cell)
                continue
            for key in keys:
                refined.append([v for v in cell if signature[v] == key])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twin_generators(rows: Sequence[int], colour_of: Sequence[int]) -> list[list[int]]:
    """Transpositions of open or closed twins of equal colour."""
    gens: list[list[int]] = []
    n = len(rows)
    for closed in (False, True):
        groups: dict[tuple[int, int], list[int]] = {}
        for v, row in enumerate(rows):
            key = (row | (1 << v)) if closed else row
            groups.setdefault((key, colour_of[v]), []).append(v)
        for members in groups.values():
            first = members[0]
            for other in members[1:]:
                perm = list(range(n))
                perm[first], perm[other] = other, first
                gens.append(perm)
    return gens


class _CanonicalSearch:
    """One search tree; keeps the first leaf, the best leaf and found automorphisms."""

    def __init__(self, rows: Sequence[int], colour_of: Sequence[int]) -> None:
        self.rows = rows
        self.n = len(rows)
        self.generators = _twin_generators(rows, colour_of)
        self.first: Optional[tuple[tuple[int, ...], list[int], list[int]]] = None
        self.best: Optional[tuple[tuple[int, ...], list[int], list[int]]] = None
        self.leaves = 0

    def _code(self, order: list[int]) -> tuple[int, ...]:
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        return tuple(to_mask(position[u] for u in iter_bits(self.rows[v])) for v in order)

    def _same_orbit(self, v: int, tried: list[int], prefix: list[int]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.generators:
            if any(perm[p] != p for p in prefix):
                continue
            for x, y in enumerate(perm):
                if x != y:
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[rx] = ry
        root = find(v)
        return any(find(u) == root for u in tried)

    def _leaf(self, cells: Cells, path: list[int]) -> Optional[int]:
        self.leaves += 1
        order = [cell[0] for cell in cells]
        code = self._code(order)
        if self.first is None:
            self.first = (code, order, list(path))
            self.best = self.first
            return None
        for ref_code, ref_order, ref_path in (self.first, self.best):
            if code == ref_code:
                perm = list(range(self.n))
                for a, b in zip(ref_order, order):
                    perm[a] = b
                self.generators.append(perm)
                common = 0
                while common < len(path) and path[common] == ref_path[common]:
                    common += 1
                return common
        if code > self.best[0]:
            self.best = (code, order, list(path))
        return None

    def visit(self, cells: Cells, path: list[int]) -> Optional[int]:
        """Explore the subtree; a returned depth means abandon up to that level."""
        cells = _refine(self.rows, cells)
        if len(cells) == self.n:
            return self._leaf(cells, path)
        index = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[index]
        tried: list[int] = []
        depth = len(path)
        for v in target:
            if tried and self._same_orbit(v, tried, path):
                continue
            tried.append(v)
            child = cells[:index] + [[v], [u for u in target if u != v]] + cells[index + 1:]
            jump = self.visit(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(g: Graph, colours: Optional[Sequence[Sequence[int]]] = None) -> list[int]:
    """
    Canonical position of every vertex.

    Args:
        g: Graph to label.
        colours: Optional ordered partition of the vertices; positions respect
            the colour order and only colour-preserving isomorphisms are used.

    Returns:
        list where entry v is the canonical position of vertex v.
    """
    if g.n == 0:
        return []
    if colours is None:
        cells: Cells = [list(range(g.n))]
    else:
        cells = [sorted(c) for c in colours if len(c)]
        if sorted(v for c in cells for v in c) != list(range(g.n)):
            raise ValueError("[canonical_labeling] colours must partition the vertices")
    colour_of = [0] * g.n
    for i, cell in enumerate(cells):
        for v in cell:
            colour_of[v] = i
    search = _CanonicalSearch(g.rows, colour_of)
    search.visit(cells, [])
    order = search.best[1]
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    return position


def canonical_form(g: Graph, colours: Optional[Sequence[Sequence[int]]] = None) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    relabelled = g.relabel(canonical_labeling(g, colours))
    body = encode_graph6(relabelled)
    if colours is None:
        return body
    sizes = ",".join(str(len(c)) for c in colours if len(c))
    return sizes.encode("ascii") + b"|" + body


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
