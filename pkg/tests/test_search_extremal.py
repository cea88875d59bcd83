import pytest

from graphs.canonical import are_isomorphic
from graphs.graph import complete_bipartite
from graphs.graph6 import decode_graph
from search.extremal import (
    e3t_doubleprime,
    e_rt,
    m_shatter,
    run_search,
    s3t_prime,
    s_rt,
    sat_min,
    tsat_min,
)
from search.models import EnumerationBudget, RecordKind, RecordStatus, WitnessFormat
from search.validation import witness_problem
from systems.serialization import loads_system


def _found(record, value=None):
    assert record.status == RecordStatus.FOUND, record.reason
    assert witness_problem(record) is None
    if value is not None:
        assert record.value == value
    return record.value


# ---------------------------------------------------------------------------
# Saturation numbers
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 8))
def test_sat_triangle_is_star(n):
    _found(sat_min(n, 3), n - 1)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_sat_k4(n):
    _found(sat_min(n, 4), 2 * n - 3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_sat_k4_larger(n):
    _found(sat_min(n, 4), 2 * n - 3)


def test_sat_witness_is_the_star():
    record = sat_min(5, 3)
    assert record.witness_format == WitnessFormat.GRAPH6
    assert are_isomorphic(decode_graph(record.witness), complete_bipartite(1, 4))
    assert record.budget_spent["candidates"] >= 0


@pytest.mark.parametrize("n", [0, 1, 2, 5, 8])
def test_tsat_exists(n):
    _found(tsat_min(n, 3))


@pytest.mark.parametrize("n", [3, 4, 6, 7])
def test_tsat_nonexistent(n):
    record = tsat_min(n, 3)
    assert record.status == RecordStatus.NONEXISTENT
    assert record.value is None and record.witness is None


def test_tsat_values():
    _found(tsat_min(5, 3), 5)
    assert _found(tsat_min(8, 3)) <= 12
    _found(tsat_min(5, 3, t=2), 5)


def test_tsat_min_deg_rejects_small_t():
    with pytest.raises(ValueError, match="below r-2"):
        tsat_min(5, 4, t=1)


# ---------------------------------------------------------------------------
# Largest families
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_s_rt_small_t(m):
    _found(s_rt(m, 3, 1), 1)
    _found(s_rt(m, 3, 2), 2)


def test_s_rt_33():
    _found(s_rt(3, 3, 3), 1)
    assert _found(s_rt(5, 3, 3)) >= 4
    assert _found(s_rt(6, 3, 3)) >= 4


def test_s3t_prime():
    _found(s3t_prime(4, 2), 4)
    assert _found(s3t_prime(6, 3)) >= 8
    record = s3t_prime(4, 2)
    assert loads_system(record.witness).primed


def test_s_rt_parameter_checks():
    with pytest.raises(ValueError, match="r must be >= 3"):
        s_rt(4, 2, 2)
    with pytest.raises(ValueError, match="below r-2"):
        s_rt(4, 4, 1)


# ---------------------------------------------------------------------------
# Fewest host edges
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("s,value", [(0, 0), (1, 0), (2, 1), (3, 2)])
def test_e_33(s, value):
    _found(e_rt(s, 3, 3), value)


def test_e_33_maximal():
    record = e_rt(2, 3, 3, require_maximal=True)
    _found(record, 1)
    assert record.kind == RecordKind.E_RT_MAXIMAL
    assert loads_system(record.witness).maximal


@pytest.mark.parametrize("s,value", [(1, 0), (2, 1), (4, 2)])
def test_e3t_doubleprime(s, value):
    _found(e3t_doubleprime(s, 2), value)


def test_e_rt_parameter_checks():
    with pytest.raises(ValueError, match="must be >= r"):
        e_rt(1, 3, 2)
    with pytest.raises(ValueError, match="negative"):
        e_rt(-1, 3, 3)


def test_edge_cap_gives_budget_record():
    record = e_rt(3, 3, 3, budget=EnumerationBudget(max_edges=1))
    assert record.status == RecordStatus.BUDGET_EXCEEDED
    assert record.reason == "2 edges exceeds cap 1"
    assert record.value is None


# ---------------------------------------------------------------------------
# Shattering and dispatch
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k,size", [(2, 4), (3, 4), (4, 5)])
def test_m_shatter(k, size):
    record = m_shatter(k)
    _found(record, size)
    assert record.witness_format == WitnessFormat.SEQUENCES
    assert record.witness.startswith("0" * k)


def test_m_shatter_range():
    with pytest.raises(ValueError, match="2..4"):
        m_shatter(5)


def test_vertex_cap_gives_budget_record():
    record = sat_min(10, 4, budget=EnumerationBudget(max_vertices=9))
    assert record.status == RecordStatus.BUDGET_EXCEEDED
    assert record.reason == "10 vertices exceeds cap 9"
    assert record.witness is None


def test_run_search_dispatch():
    record = run_search(RecordKind.E3T_DOUBLEPRIME, {"s": 2, "t": 2})
    assert (record.kind, record.value) == (RecordKind.E3T_DOUBLEPRIME, 1)
    assert run_search(RecordKind.M_SHATTER, {"k": 2, "n": 99}).value == 4
    with pytest.raises(ValueError, match="needs m, t"):
        run_search(RecordKind.S3T_PRIME, {})


def test_reruns_are_identical():
    first = e_rt(2, 3, 3)
    second = e_rt(2, 3, 3)
    assert first.witness == second.witness
    assert first.value == second.value
