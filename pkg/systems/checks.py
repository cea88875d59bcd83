"""
Validity and maximality checks for (r,t)-systems and (3,t)'-systems.

Conditions, in report order:
    host_clique_free         H is K_r-free
    sets_maximally_free      each S is maximally K_(r-1)-free in H
    pairwise_intersections   H[S ∩ T] contains K_(r-2) for distinct members (not for primed)
    uniform_size             |S| = t and no repeated members (only when t is set)
    maximal                  every missing edge creates K_r, or K_(r-1) inside some S (only when claimed)
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from graphs.bits import find_clique, has_clique, iter_bits, lowest
from graphs.graph import Graph
from systems.models import (
    ConditionResult,
    MaximalityReport,
    SystemInstance,
    SystemReport,
)

logger = logging.getLogger(__name__)


def maximally_free_violation(host: Graph, mask: int, k: int) -> Optional[str]:
    """
    Describe why the vertex set `mask` is not maximally K_k-free, or None.

    For k = 2 this is maximal independence: no edge inside and every outside
    vertex has a neighbour inside.
    """
    rows = host.rows
    if k == 2:
        dominated = mask
        for v in iter_bits(mask):
            inside = rows[v] & mask
            if inside:
                return f"edge ({v}, {lowest(inside)}) inside set"
            dominated |= rows[v]
        outside = host.vertex_mask & ~dominated
        if outside:
            return f"vertex {lowest(outside)} not dominated"
        return None
    clique = find_clique(rows, mask, k)
    if clique is not None:
        return f"K_{k} {clique} inside set"
    for v in iter_bits(host.vertex_mask & ~mask):
        if not has_clique(rows, mask & rows[v], k - 1):
            return f"adding vertex {v} creates no K_{k}"
    return None


def is_maximally_free(host: Graph, mask: int, k: int) -> bool:
    return maximally_free_violation(host, mask, k) is None


def membership_masks(n: int, masks: Sequence[int]) -> list[int]:
    """member[v] has bit i set when set i contains v."""
    member = [0] * n
    for i, mask in enumerate(masks):
        bit = 1 << i
        for v in iter_bits(mask):
            member[v] |= bit
    return member


def first_unfilled_edge(host: Graph, masks: Sequence[int], r: int) -> Optional[tuple[int, int]]:
    """
    First missing host edge (lexicographic) that creates neither a K_r in
    H+e nor a K_(r-1) inside H+e restricted to some family set.
    """
    rows = host.rows
    member = membership_masks(host.n, masks)
    for u, v in host.missing_edges():
        common = rows[u] & rows[v]
        if has_clique(rows, common, r - 2):
            continue
        shared = member[u] & member[v]
        if not shared:
            return u, v
        if r == 3:
            continue
        if not any(has_clique(rows, masks[i] & common, r - 3) for i in iter_bits(shared)):
            return u, v
    return None


def _pairwise_violation(host: Graph, masks: Sequence[int], mults: Sequence[int], r: int) -> Optional[str]:
    rows = host.rows
    k = r - 2
    if not masks:
        return None
    common = host.vertex_mask
    for mask in masks:
        common &= mask
    if has_clique(rows, common, k):
        return None
    for i, mult in enumerate(mults):
        if mult > 1 and not has_clique(rows, masks[i], k):
            return f"repeated set {i} contains no K_{k}"
    seen: set[tuple[int, int]] = set()
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            b = masks[j]
            key = (a, b) if a <= b else (b, a)
            if key in seen:
                continue
            seen.add(key)
            if not has_clique(rows, a & b, k):
                return f"sets {i} and {j} share no K_{k}"
    return None


def _base_conditions(inst: SystemInstance) -> list[ConditionResult]:
    host, family, r = inst.host, inst.family, inst.r
    masks = family.masks()
    results: list[ConditionResult] = []

    clique = find_clique(host.rows, host.vertex_mask, r)
    results.append(ConditionResult(
        name="host_clique_free",
        passed=clique is None,
        counterexample=None if clique is None else f"K_{r} on {clique}",
    ))

    bad_set = None
    for i, mask in enumerate(masks):
        why = maximally_free_violation(host, mask, r - 1)
        if why is not None:
            bad_set = f"set {i} {list(family.sets[i])}: {why}"
            break
    results.append(ConditionResult(name="sets_maximally_free", passed=bad_set is None, counterexample=bad_set))

    if inst.primed:
        results.append(ConditionResult(name="pairwise_intersections", passed=True, skipped=True))
    else:
        why = _pairwise_violation(host, masks, family.multiplicities, r)
        results.append(ConditionResult(name="pairwise_intersections", passed=why is None, counterexample=why))

    if inst.t is None:
        results.append(ConditionResult(name="uniform_size", passed=True, skipped=True))
    else:
        why = None
        for i, s in enumerate(family.sets):
            if len(s) != inst.t:
                why = f"set {i} has size {len(s)} != {inst.t}"
                break
        if why is None and family.has_repeats():
            why = "family has repeated members"
        results.append(ConditionResult(name="uniform_size", passed=why is None, counterexample=why))
    return results


def check_system(inst: SystemInstance) -> SystemReport:
    """
    Evaluate every system condition the instance claims.

    Failures are report entries, never exceptions; each failed condition
    carries its first counterexample.
    """
    results = _base_conditions(inst)
    if inst.maximal:
        if all(c.passed for c in results):
            edge = first_unfilled_edge(inst.host, inst.family.masks(), inst.r)
            results.append(ConditionResult(
                name="maximal",
                passed=edge is None,
                counterexample=None if edge is None else f"missing edge {edge}",
            ))
        else:
            results.append(ConditionResult(
                name="maximal", passed=False, counterexample="base system invalid"
            ))
    else:
        results.append(ConditionResult(name="maximal", passed=True, skipped=True))
    report = SystemReport(valid=all(c.passed for c in results), conditions=results)
    if not report.valid:
        logger.debug("check_system %r failed: %s", inst, report.first_failure())
    return report


def check_maximal(inst: SystemInstance) -> MaximalityReport:
    """
    Decide maximality of a valid system.

    Raises:
        ValueError: if the base system (ignoring the maximality claim) is invalid.
    """
    failure = next((c for c in _base_conditions(inst) if not c.passed), None)
    if failure is not None:
        raise ValueError(f"[check_maximal] invalid base system: {failure.name}: {failure.counterexample}")
    edge = first_unfilled_edge(inst.host, inst.family.masks(), inst.r)
    return MaximalityReport(is_maximal=edge is None, violating_edge=edge)
