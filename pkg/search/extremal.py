"""
Exhaustive oracles for the extremal quantities: sat, tsat, s_{r,t}, s'_{3,t},
e_{r,t}, e'_{r,t}, e''_{3,t} and the shattering minimum m(k).

Every search runs under a BudgetTracker; a BudgetExceeded raised anywhere
inside becomes a record with status budget_exceeded, never a value.
"""

from __future__ import annotations

import logging
from itertools import combinations, product
from typing import Callable, Optional

from graphs.bits import full_mask
from graphs.graph import Graph, empty_graph
from graphs.graph6 import encode_graph6
from graphs.saturation import is_saturated, is_tsat_witness
from search.candidates import compatibility_rows, family_of, maximal_free_sets
from search.cliques import iter_cliques, max_clique
from search.enumerate import AllOf, CliqueFree, EdgeCap, enumerate_graphs
from search.models import (
    BudgetExceeded,
    BudgetTracker,
    EnumerationBudget,
    ExtremalRecord,
    RecordKind,
    RecordStatus,
    WitnessFormat,
)
from systems.checks import first_unfilled_edge
from systems.models import SystemInstance, VertexSetFamily
from systems.serialization import dumps_system

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Record plumbing
# ---------------------------------------------------------------------------

def _run(
    kind: RecordKind,
    params: dict[str, int],
    budget: Optional[EnumerationBudget],
    body: Callable[[BudgetTracker], tuple[RecordStatus, Optional[int], Optional[str], Optional[WitnessFormat]]],
) -> ExtremalRecord:
    tracker = BudgetTracker(budget)
    try:
        status, value, witness, fmt = body(tracker)
        reason = None
    except BudgetExceeded as e:
        logger.warning("%s%s: %s", kind.value, params, e.reason)
        status, value, witness, fmt, reason = RecordStatus.BUDGET_EXCEEDED, None, None, None, e.reason
    record = ExtremalRecord(
        kind=kind,
        params=params,
        status=status,
        value=value,
        witness=witness,
        witness_format=fmt,
        budget_spent=tracker.spent(),
        budget_fingerprint=tracker.budget.fingerprint(),
        reason=reason,
    )
    logger.info("%s%s -> %s %s", kind.value, params, status.value, value)
    return record


def _graph_witness(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


def _system_witness(host: Graph, family: VertexSetFamily, r: int, t: int, primed: bool = False, maximal: bool = False) -> str:
    return dumps_system(SystemInstance(host=host, family=family, r=r, t=t, primed=primed, maximal=maximal))


def _check_r(r: int, where: str) -> None:
    if r < 3:
        raise ValueError(f"[{where}] r must be >= 3, got {r}")


# ---------------------------------------------------------------------------
# Saturation numbers
# ---------------------------------------------------------------------------

def _min_saturated(
    n: int,
    r: int,
    accept: Callable[[Graph], bool],
    tracker: BudgetTracker,
    workers: int,
) -> Optional[Graph]:
    best: Optional[Graph] = None
    for g in enumerate_graphs(n, CliqueFree(r), tracker, workers):
        if best is not None and g.edge_count >= best.edge_count:
            continue
        if accept(g):
            best = g
    return best


def sat_min(n: int, r: int, budget: Optional[EnumerationBudget] = None, workers: int = 1) -> ExtremalRecord:
    """Minimum edges of a K_r-saturated graph on n vertices."""
    _check_r(r, "sat_min")

    def body(tracker: BudgetTracker):
        best = _min_saturated(n, r, lambda g: is_saturated(g, r), tracker, workers)
        return RecordStatus.FOUND, best.edge_count, _graph_witness(best), WitnessFormat.GRAPH6

    return _run(RecordKind.SAT, {"n": n, "r": r}, budget, body)


def tsat_min(
    n: int,
    r: int,
    t: Optional[int] = None,
    budget: Optional[EnumerationBudget] = None,
    workers: int = 1,
) -> ExtremalRecord:
    """
    Minimum edges of a twin-free K_r-saturated graph on n vertices, or with t
    given, of a K_r-saturated graph with minimum degree t-compatible twins.
    """
    _check_r(r, "tsat_min")
    if t is not None and t < r - 2:
        raise ValueError(f"[tsat_min] t={t} below r-2={r - 2}")
    kind = RecordKind.TSAT if t is None else RecordKind.TSAT_MIN_DEG
    params = {"n": n, "r": r} if t is None else {"n": n, "r": r, "t": t}

    def body(tracker: BudgetTracker):
        best = _min_saturated(n, r, lambda g: is_tsat_witness(g, r, t), tracker, workers)
        if best is None:
            return RecordStatus.NONEXISTENT, None, None, None
        return RecordStatus.FOUND, best.edge_count, _graph_witness(best), WitnessFormat.GRAPH6

    return _run(kind, params, budget, body)


# ---------------------------------------------------------------------------
# Largest families
# ---------------------------------------------------------------------------

def s_rt(m: int, r: int, t: int, budget: Optional[EnumerationBudget] = None, workers: int = 1) -> ExtremalRecord:
    """Largest family of an (r,t)-system on m host vertices."""
    _check_r(r, "s_rt")
    if t < r - 2:
        raise ValueError(f"[s_rt] t={t} below r-2={r - 2}")

    def body(tracker: BudgetTracker):
        best = -1
        witness = None
        for host in enumerate_graphs(m, CliqueFree(r), tracker, workers):
            tracker.charge_host()
            sets = maximal_free_sets(host, r, t, tracker)
            if len(sets) <= best:
                continue
            compat = compatibility_rows(host, sets, r)
            clique = max_clique(compat, full_mask(len(sets)), tracker)
            if len(clique) > best:
                best = len(clique)
                witness = _system_witness(host, family_of(sets, clique), r, t)
        return RecordStatus.FOUND, best, witness, WitnessFormat.SYSTEM

    return _run(RecordKind.S_RT, {"m": m, "r": r, "t": t}, budget, body)


def s3t_prime(m: int, t: int, budget: Optional[EnumerationBudget] = None, workers: int = 1) -> ExtremalRecord:
    """Largest family of a (3,t)'-system on m host vertices: the most maximal independent t-sets."""
    if t < 1:
        raise ValueError(f"[s3t_prime] t must be >= 1, got {t}")

    def body(tracker: BudgetTracker):
        best = -1
        witness = None
        for host in enumerate_graphs(m, CliqueFree(3), tracker, workers):
            tracker.charge_host()
            sets = maximal_free_sets(host, 3, t, tracker)
            if len(sets) > best:
                best = len(sets)
                witness = _system_witness(host, family_of(sets, list(range(len(sets)))), 3, t, primed=True)
        return RecordStatus.FOUND, best, witness, WitnessFormat.SYSTEM

    return _run(RecordKind.S3T_PRIME, {"m": m, "t": t}, budget, body)


# ---------------------------------------------------------------------------
# Fewest host edges
# ---------------------------------------------------------------------------

def _family_of_size(
    host: Graph,
    r: int,
    t: int,
    s: int,
    maximal: bool,
    primed: bool,
    tracker: BudgetTracker,
) -> Optional[VertexSetFamily]:
    sets = maximal_free_sets(host, r, t, tracker)
    if len(sets) < s:
        return None
    if primed and not maximal:
        return family_of(sets, list(range(s)))
    compat = compatibility_rows(host, sets, r, primed)
    everything = full_mask(len(sets))
    if not maximal:
        clique = max_clique(compat, everything, tracker, target=s)
        return family_of(sets, clique[:s]) if len(clique) >= s else None
    for clique in iter_cliques(compat, everything, size=s, tracker=tracker):
        if first_unfilled_edge(host, [sets[i] for i in clique], r) is None:
            return family_of(sets, clique)
    return None


def _min_edges(
    s: int,
    r: int,
    t: int,
    maximal: bool,
    primed: bool,
    tracker: BudgetTracker,
    workers: int,
):
    if s == 0:
        host = empty_graph(0)
        return RecordStatus.FOUND, 0, _system_witness(host, VertexSetFamily(), r, t, primed, maximal), WitnessFormat.SYSTEM
    edges = 0
    while True:
        tracker.require_edges(edges)
        # a system with a nonempty family has e(H) >= m - t
        for m in range(t, edges + t + 1):
            tracker.require_vertices(m, r == 3)
            for host in enumerate_graphs(m, AllOf((CliqueFree(r), EdgeCap(edges))), tracker, workers):
                if host.edge_count != edges:
                    continue
                tracker.charge_host()
                family = _family_of_size(host, r, t, s, maximal, primed, tracker)
                if family is not None:
                    witness = _system_witness(host, family, r, t, primed, maximal)
                    return RecordStatus.FOUND, edges, witness, WitnessFormat.SYSTEM
        logger.debug("min edges s=%d r=%d t=%d: none with %d edges", s, r, t, edges)
        edges += 1


def e_rt(
    s: int,
    r: int,
    t: int,
    require_maximal: bool = False,
    budget: Optional[EnumerationBudget] = None,
    workers: int = 1,
) -> ExtremalRecord:
    """Fewest host edges of an (r,t)-system (maximal when required) with exactly s sets."""
    _check_r(r, "e_rt")
    if t < r:
        raise ValueError(f"[e_rt] t={t} must be >= r={r}")
    if s < 0:
        raise ValueError(f"[e_rt] negative family size {s}")
    kind = RecordKind.E_RT_MAXIMAL if require_maximal else RecordKind.E_RT
    return _run(
        kind,
        {"s": s, "r": r, "t": t},
        budget,
        lambda tracker: _min_edges(s, r, t, require_maximal, False, tracker, workers),
    )


def e3t_doubleprime(s: int, t: int, budget: Optional[EnumerationBudget] = None, workers: int = 1) -> ExtremalRecord:
    """Fewest host edges of a (3,t)'-system with exactly s sets."""
    if t < 1:
        raise ValueError(f"[e3t_doubleprime] t must be >= 1, got {t}")
    if s < 0:
        raise ValueError(f"[e3t_doubleprime] negative family size {s}")
    return _run(
        RecordKind.E3T_DOUBLEPRIME,
        {"s": s, "t": t},
        budget,
        lambda tracker: _min_edges(s, 3, t, False, True, tracker, workers),
    )


# ---------------------------------------------------------------------------
# Shattering
# ---------------------------------------------------------------------------

MAX_SHATTER_K = 4


def _shatter_search(k: int, size: int, tracker: BudgetTracker) -> Optional[list[tuple[int, ...]]]:
    seqs = list(product((0, 1), repeat=k))
    pairs = list(combinations(range(k), 2))
    cover = []
    for x in seqs:
        bits = 0
        for p, (i, j) in enumerate(pairs):
            bits |= 1 << (4 * p + 2 * x[i] + x[j])
        cover.append(bits)
    goal = full_mask(4 * len(pairs))
    per_seq = len(pairs)

    def walk(start: int, chosen: list[int], covered: int) -> Optional[list[int]]:
        tracker.charge_candidates()
        if covered == goal:
            return chosen
        slots = size - len(chosen)
        if slots == 0 or (goal & ~covered).bit_count() > slots * per_seq:
            return None
        for i in range(start, len(seqs)):
            found = walk(i + 1, chosen + [i], covered | cover[i])
            if found is not None:
                return found
        return None

    # flipping coordinates preserves shattering, so some optimum contains 0_k
    found = walk(1, [0], cover[0])
    return None if found is None else [seqs[i] for i in found]


def m_shatter(k: int, budget: Optional[EnumerationBudget] = None) -> ExtremalRecord:
    """
    Least size of a pair-shattering set of binary k-sequences, by iterative deepening.

    Raises:
        ValueError: if k is outside 2..4.
    """
    if not 2 <= k <= MAX_SHATTER_K:
        raise ValueError(f"[m_shatter] exhaustive range is k in 2..{MAX_SHATTER_K}, got {k}")

    def body(tracker: BudgetTracker):
        for size in range(1, 2 ** k + 1):
            found = _shatter_search(k, size, tracker)
            if found is not None:
                witness = ",".join("".join(map(str, x)) for x in found)
                return RecordStatus.FOUND, size, witness, WitnessFormat.SEQUENCES
        return RecordStatus.NONEXISTENT, None, None, None

    return _run(RecordKind.M_SHATTER, {"k": k}, budget, body)


# record kind -> parameter names, in call order
SEARCH_PARAMS: dict[RecordKind, tuple[str, ...]] = {
    RecordKind.SAT: ("n", "r"),
    RecordKind.TSAT: ("n", "r"),
    RecordKind.TSAT_MIN_DEG: ("n", "r", "t"),
    RecordKind.S_RT: ("m", "r", "t"),
    RecordKind.S3T_PRIME: ("m", "t"),
    RecordKind.E_RT: ("s", "r", "t"),
    RecordKind.E_RT_MAXIMAL: ("s", "r", "t"),
    RecordKind.E3T_DOUBLEPRIME: ("s", "t"),
    RecordKind.M_SHATTER: ("k",),
}


def run_search(
    kind: RecordKind,
    params: dict[str, int],
    budget: Optional[EnumerationBudget] = None,
    workers: int = 1,
) -> ExtremalRecord:
    """
    Dispatch a search by record kind.

    Raises:
        ValueError: if a parameter is missing or out of range for the kind.
    """
    missing = [p for p in SEARCH_PARAMS[kind] if params.get(p) is None]
    if missing:
        raise ValueError(f"[run_search] {kind.value} needs {', '.join(missing)}")
    args = [params[p] for p in SEARCH_PARAMS[kind]]
    if kind == RecordKind.M_SHATTER:
        return m_shatter(*args, budget=budget)
    if kind == RecordKind.SAT:
        return sat_min(*args, budget=budget, workers=workers)
    if kind in (RecordKind.TSAT, RecordKind.TSAT_MIN_DEG):
        return tsat_min(*args, budget=budget, workers=workers)
    if kind in (RecordKind.E_RT, RecordKind.E_RT_MAXIMAL):
        return e_rt(*args, require_maximal=kind == RecordKind.E_RT_MAXIMAL, budget=budget, workers=workers)
    if kind == RecordKind.S_RT:
        return s_rt(*args, budget=budget, workers=workers)
    if kind == RecordKind.S3T_PRIME:
        return s3t_prime(*args, budget=budget, workers=workers)
    return e3t_doubleprime(*args, budget=budget, workers=workers)
