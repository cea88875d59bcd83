"""
Exhaustive search: isomorphism-free enumeration, clique search and the
extremal oracles, all under an EnumerationBudget.
"""

from search.candidates import iter_systems, maximal_free_sets
from search.enumerate import AllOf, CliqueFree, EdgeCap, enumerate_graphs
from search.extremal import (
    SEARCH_PARAMS,
    e3t_doubleprime,
    e_rt,
    m_shatter,
    run_search,
    s3t_prime,
    s_rt,
    sat_min,
    tsat_min,
)
from search.models import (
    BudgetExceeded,
    BudgetTracker,
    EnumerationBudget,
    ExtremalRecord,
    RecordKind,
    RecordStatus,
    WitnessFormat,
)
from search.stability import StabilityReport, classify_33_systems, classify_conical_systems
from search.validation import revalidate, witness_problem

__all__ = [
    "iter_systems",
    "maximal_free_sets",
    "AllOf",
    "CliqueFree",
    "EdgeCap",
    "enumerate_graphs",
    "SEARCH_PARAMS",
    "e3t_doubleprime",
    "e_rt",
    "m_shatter",
    "run_search",
    "s3t_prime",
    "s_rt",
    "sat_min",
    "tsat_min",
    "BudgetExceeded",
    "BudgetTracker",
    "EnumerationBudget",
    "ExtremalRecord",
    "RecordKind",
    "RecordStatus",
    "WitnessFormat",
    "StabilityReport",
    "classify_33_systems",
    "classify_conical_systems",
    "revalidate",
    "witness_problem",
]
