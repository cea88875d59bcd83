"""
Report-only stability classification over enumerated systems.

For (3,3)-systems in which every host vertex lies in some set, large
families should only come from the lifted matching construction on l+1
vertices with l even. For (r,r)-systems, large families should come with
r-3 conical host vertices. Both claims are checked over every enumerated
system and summarised per family size; nothing here ever fails.

The (3,3) scan also splits systems into those whose sets share a vertex
and the rest, recording for the rest how many sets the best independent
pair carries.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Callable, Optional

from pydantic import BaseModel, Field

from constructions.families import ConstructionParams, lifted_family
from graphs.bits import full_mask, lowest
from search.candidates import iter_systems
from search.models import BudgetExceeded, BudgetTracker, EnumerationBudget
from systems.models import SystemInstance
from systems.operations import restrict_pair, system_canonical_form

logger = logging.getLogger(__name__)


class StabilityRow(BaseModel):
    size: int = Field(description="Family size |F|")
    seen: int = Field(description="Systems with this family size")
    matching: int = Field(description="Of those, how many have the stable form")
    principal: Optional[int] = Field(default=None, description="Systems whose sets share a vertex (r=3 only)")
    pair_share: Optional[int] = Field(
        default=None, description="Least, over the other systems, of the most sets through one independent pair"
    )


class StabilityReport(BaseModel):
    """Per-size match counts and the least size from which every system matched."""

    claim: str
    max_m: int
    rows: list[StabilityRow] = Field(default_factory=list)
    threshold: Optional[int] = Field(default=None, description="Least s with all rows of size >= s matching")
    truncated: Optional[str] = Field(default=None, description="Budget reason if the scan stopped early")

    def to_markdown(self) -> str:
        lines = [
            f"### {self.claim} (m <= {self.max_m})",
            "",
            "| size | seen | matching | principal | pair share |",
            "|---|---|---|---|---|",
        ]
        lines += [
            f"| {row.size} | {row.seen} | {row.matching} | {_opt(row.principal)} | {_opt(row.pair_share)} |"
            for row in self.rows
        ]
        lines.append("")
        lines.append(f"threshold: {self.threshold if self.threshold is not None else 'none in range'}")
        if self.truncated:
            lines.append(f"truncated: {self.truncated}")
        return "\n".join(lines)


def _opt(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def _threshold(rows: list[StabilityRow]) -> Optional[int]:
    threshold = None
    for row in sorted(rows, key=lambda r: r.size, reverse=True):
        if row.matching != row.seen:
            break
        threshold = row.size
    return threshold


def _classify(
    claim: str,
    r: int,
    t: int,
    sizes: range,
    keep: Callable[[SystemInstance], bool],
    matches: Callable[[SystemInstance], bool],
    budget: Optional[EnumerationBudget],
    split: bool = False,
) -> StabilityReport:
    tracker = BudgetTracker(budget)
    seen: dict[int, int] = defaultdict(int)
    matching: dict[int, int] = defaultdict(int)
    principal: dict[int, int] = defaultdict(int)
    pair_share: dict[int, int] = {}
    truncated = None
    try:
        for m in sizes:
            for inst in iter_systems(m, r, t, tracker=tracker):
                if not keep(inst):
                    continue
                seen[inst.size] += 1
                if matches(inst):
                    matching[inst.size] += 1
                if split:
                    if common_vertex(inst) is not None:
                        principal[inst.size] += 1
                    else:
                        share = heaviest_pair(inst).size
                        pair_share[inst.size] = min(share, pair_share.get(inst.size, share))
            logger.info("%s: finished m=%d", claim, m)
    except BudgetExceeded as e:
        logger.warning("%s: stopped early: %s", claim, e.reason)
        truncated = e.reason
    rows = [
        StabilityRow(
            size=s,
            seen=seen[s],
            matching=matching[s],
            principal=principal[s] if split else None,
            pair_share=pair_share.get(s),
        )
        for s in sorted(seen)
    ]
    return StabilityReport(
        claim=claim,
        max_m=sizes.stop - 1,
        rows=rows,
        threshold=_threshold(rows),
        truncated=truncated,
    )


def common_vertex(inst: SystemInstance) -> Optional[int]:
    """Least vertex lying in every set, if the family has one."""
    masks = inst.family.masks()
    if not masks:
        return None
    common = inst.host.vertex_mask
    for mask in masks:
        common &= mask
    return lowest(common) if common else None


def heaviest_pair(inst: SystemInstance) -> Optional[SystemInstance]:
    """
    Restriction at the independent pair lying in the most sets.

    Ties go to the lexicographically least pair; None when the host has no
    independent pair.
    """
    best = None
    for pair in inst.host.missing_edges():
        restricted = restrict_pair(inst, pair)
        if best is None or restricted.size > best.size:
            best = restricted
    return best


def _covers_host(inst: SystemInstance) -> bool:
    return all(c >= 1 for c in inst.family.membership_counts(inst.m))


def classify_33_systems(max_m: int, budget: Optional[EnumerationBudget] = None) -> StabilityReport:
    """
    Classify every (3,3)-system on at most max_m host vertices with s(v) >= 1
    everywhere against the lifted matching system on the same vertex count.
    """
    stable: dict[int, Optional[bytes]] = {}

    def stable_form(m: int) -> Optional[bytes]:
        if m not in stable:
            l = m - 1
            stable[m] = system_canonical_form(lifted_family(ConstructionParams(t=2, l=l))) if l >= 2 and l % 2 == 0 else None
        return stable[m]

    def matches(inst: SystemInstance) -> bool:
        form = stable_form(inst.m)
        return form is not None and system_canonical_form(inst) == form

    return _classify("(3,3) stability", 3, 3, range(3, max_m + 1), _covers_host, matches, budget, split=True)


def conical_vertices(inst: SystemInstance) -> list[int]:
    """Host vertices adjacent to every other host vertex."""
    host = inst.host
    full = full_mask(host.n)
    return [v for v in range(host.n) if host.rows[v] | (1 << v) == full]


def classify_conical_systems(r: int, max_m: int, budget: Optional[EnumerationBudget] = None) -> StabilityReport:
    """Count (r,r)-systems on at most max_m vertices that have at least r-3 conical vertices."""
    if r < 4:
        raise ValueError(f"[classify_conical_systems] r must be >= 4, got {r}")
    return _classify(
        f"({r},{r}) conical",
        r,
        r,
        range(r, max_m + 1),
        lambda inst: True,
        lambda inst: len(conical_vertices(inst)) >= r - 3,
        budget,
    )
