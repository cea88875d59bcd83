from itertools import combinations

import pytest
from pydantic import ValidationError

from conftest import random_graph
from graphs.bits import to_mask
from graphs.graph import cycle_graph, make_graph, path_graph
from graphs.graph6 import ParseError
from graphs.saturation import is_saturated
from search.candidates import iter_systems
from systems.checks import check_maximal, check_system, is_maximally_free
from systems.models import SystemInstance, VertexSetFamily
from systems.operations import assemble, maximalize
from systems.serialization import dumps_system, loads_system


def test_family_normalises_and_counts():
    family = VertexSetFamily.of([(2, 0), (1,)], [1, 3])
    assert family.sets == ((0, 2), (1,))
    assert family.total == 4
    assert family.membership_counts(3) == [1, 3, 1]
    assert family.has_repeats()
    with pytest.raises(ValidationError):
        VertexSetFamily.of([(0,)], [0])


def test_instance_rejects_bad_parameters():
    with pytest.raises(ValidationError, match="outside host"):
        SystemInstance(host=path_graph(2), family=VertexSetFamily.of([(0, 3)]))
    with pytest.raises(ValidationError, match="below r-2"):
        SystemInstance(host=path_graph(2), r=4, t=1)
    with pytest.raises(ValidationError, match="primed"):
        SystemInstance(host=path_graph(2), r=4, primed=True)


def test_maximal_independence():
    c5 = cycle_graph(5)
    assert is_maximally_free(c5, to_mask([0, 2]), 2)
    assert not is_maximally_free(c5, to_mask([0]), 2)
    assert not is_maximally_free(c5, to_mask([0, 1]), 2)


def test_four_set_system_is_valid_and_maximal(four_set_system):
    report = check_system(four_set_system)
    assert report.valid
    assert report.condition("maximal").skipped
    assert check_maximal(four_set_system).is_maximal
    assert check_system(four_set_system.with_changes(maximal=True)).valid


def test_uniform_size_failure(four_set_system):
    report = check_system(four_set_system.with_changes(t=2))
    assert not report.valid
    failure = report.first_failure()
    assert failure.name == "uniform_size"
    assert failure.counterexample == "set 0 has size 3 != 2"


def test_primed_skips_intersections():
    host = make_graph(4, [(0, 1), (2, 3)])
    family = VertexSetFamily.of([(0, 2), (1, 3)])
    plain = SystemInstance(host=host, family=family, r=3, t=2)
    primed = plain.with_changes(primed=True)
    assert check_system(plain).condition("pairwise_intersections").passed is False
    assert check_system(primed).valid
    assert check_system(primed).condition("pairwise_intersections").skipped


def test_maximality_claim_reports_missing_edge(two_k2_k1):
    inst = SystemInstance(host=two_k2_k1, family=VertexSetFamily.of([(0, 2, 4)]), r=3, t=3, maximal=True)
    report = check_system(inst)
    assert not report.valid
    assert report.condition("maximal").counterexample == "missing edge (0, 3)"
    assert check_maximal(inst).violating_edge == (0, 3)


def test_check_maximal_requires_valid_base():
    inst = SystemInstance(host=path_graph(3), family=VertexSetFamily.of([(0,)]), r=3)
    with pytest.raises(ValueError, match="sets_maximally_free"):
        check_maximal(inst)


def _random_claim(rng, m, r, t):
    host = random_graph(rng, m, rng.choice([0.3, 0.5, 0.7]))
    pool = list(combinations(range(m), t))
    sets = rng.sample(pool, rng.randint(0, min(3, len(pool))))
    return SystemInstance(host=host, family=VertexSetFamily.of(sets), r=r, t=t, maximal=True)


def test_maximal_claim_iff_assembly_saturated(rng):
    # includes invalid hosts, non-maximal sets and non-maximal systems
    count = 0
    for m in range(4, 8):
        for r in (3, 4):
            for t in (2, 3, 4):
                for _ in range(10):
                    inst = _random_claim(rng, m, r, t)
                    g = assemble(inst.host, inst.family)
                    assert check_system(inst).valid == is_saturated(g, r), inst
                    count += 1
    assert count >= 200


@pytest.mark.parametrize("m,r,t", [(4, 3, 2), (5, 3, 3), (4, 4, 2), (5, 4, 3)])
def test_maximal_iff_assembly_saturated(m, r, t):
    count = 0
    for inst in iter_systems(m, r, t):
        g = assemble(inst.host, inst.family)
        assert check_maximal(inst).is_maximal == is_saturated(g, r)
        full = maximalize(inst)
        assert is_saturated(assemble(full.host, full.family), r)
        count += 1
    assert count > 0


def test_json_round_trip(four_set_system):
    text = dumps_system(four_set_system.with_changes(maximal=True))
    back = loads_system(text)
    assert back == four_set_system.with_changes(maximal=True)


def test_json_errors():
    with pytest.raises(ParseError):
        loads_system("{not json")
    with pytest.raises(ParseError):
        loads_system('{"host": "D?", "sets": [], "mults": [], "r": 3}')
    with pytest.raises(ValueError):
        loads_system('{"host": "A_", "sets": [[0, 5]], "mults": [1], "r": 3}')
