import pytest
from pydantic import ValidationError

from constructions.families import ConstructionParams, family_size, host_size, lifted_family, system_family
from constructions.witnesses import (
    InfeasibleError,
    e34_upper_witness,
    e35_upper_witness,
    excess_constant,
    fifth_root_ceil,
    many_sets_witness,
    tsat_min_deg_upper_witness,
    tsat_upper_witness,
    witness_excess,
)
from graphs.graph import cycle_graph, is_twin_free
from graphs.saturation import is_tsat_witness
from systems.checks import check_maximal, check_system


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6, 7])
def test_matching_removed_host(l):
    inst = system_family(ConstructionParams(t=2, l=l))
    assert inst.m == l
    assert inst.size == l // 2
    assert inst.host.edge_count == -(-(l * l - 2 * l) // 4)


def _construction_grid():
    for t in range(2, 7):
        for l in range(2, 6):
            if t == 3 and l < 3:
                continue
            marks = [pytest.mark.slow] if t >= 5 and t + l >= 10 else []
            yield pytest.param(t, l, marks=marks, id=f"t{t}-l{l}")


def _host_edges(t, l):
    if t == 2:
        return -(-(l * l - 2 * l) // 4)
    if t == 3:
        return l * (l - 2)
    if t == 4:
        return l ** 4 - 2 * l ** 3 + 2 * l ** 2
    return t * l * l * 2 * l * (l - 1) // 2


def _lift_is_maximal(t, l):
    if t == 2:
        return l == 2 or (l % 2 == 0 and l >= 6)
    if t == 3:
        return l != 4
    return l >= 3


@pytest.mark.parametrize("t,l", list(_construction_grid()))
def test_construction_grid(t, l):
    p = ConstructionParams(t=t, l=l)
    inst = system_family(p)
    assert inst.primed and inst.t == t
    assert inst.m == host_size(p)
    assert inst.size == family_size(p)
    assert inst.host.edge_count == _host_edges(t, l)
    assert check_system(inst).valid

    lifted = lifted_family(p)
    assert lifted.t == t + 1 and not lifted.primed
    assert lifted.m == inst.m + 1
    assert check_system(lifted.with_changes(maximal=False)).valid
    assert lifted.maximal == _lift_is_maximal(t, l)
    if t >= 5:
        assert inst.host.is_regular()
        assert inst.host.degree(0) == 2 * l * (l - 1)
        assert is_twin_free(lifted.host)


def test_cyclic_product_is_regular():
    inst = system_family(ConstructionParams(t=5, l=2))
    assert inst.m == 20
    assert inst.size == 32
    assert inst.host.is_regular()
    assert inst.host.degree(0) == 2 * 2 * 1


def test_params_threshold():
    with pytest.raises(ValidationError, match="t=3 needs l >= 3"):
        ConstructionParams(t=3, l=2)
    with pytest.raises(ValidationError):
        ConstructionParams(t=1, l=4)


@pytest.mark.parametrize(
    "t,l,maximal",
    [
        (2, 2, True),
        (2, 3, False),
        (2, 4, False),
        (2, 5, False),
        (2, 6, True),
        (2, 8, True),
        (3, 3, True),
        (3, 4, False),
        (3, 5, True),
        (4, 2, False),
        (4, 3, True),
        (5, 2, False),
        (5, 3, True),
    ],
)
def test_lift_maximality(t, l, maximal):
    lifted = lifted_family(ConstructionParams(t=t, l=l))
    assert lifted.t == t + 1 and not lifted.primed
    assert check_system(lifted.with_changes(maximal=False)).valid
    assert lifted.maximal == maximal
    assert check_maximal(lifted).is_maximal == maximal


@pytest.mark.parametrize("s", [1, 2, 3, 5, 6, 7])
def test_e34_witness(s):
    inst = e34_upper_witness(s)
    assert (inst.r, inst.t, inst.size) == (3, 4, s)
    assert inst.maximal
    assert check_system(inst).valid


def test_e35_witness_at_full_family():
    inst = e35_upper_witness(18)
    assert inst.m == 19
    assert inst.host.edge_count == 45
    assert inst.size == 18
    assert check_system(inst).valid


@pytest.mark.parametrize("s", range(1, 19))
def test_e35_witness_is_maximal_when_built(s):
    try:
        inst = e35_upper_witness(s)
    except InfeasibleError as e:
        assert f"s={s}" in str(e)
        return
    assert inst.size == s and inst.maximal
    assert check_system(inst).valid
    assert check_maximal(inst.with_changes(maximal=False)).is_maximal


def test_e35_witness_moves_to_next_scale():
    inst = e35_upper_witness(72)
    assert inst.m == 2 * 4 * 4 + 1
    assert inst.size == 72
    assert check_maximal(inst.with_changes(maximal=False)).is_maximal


@pytest.mark.parametrize("m", [6, 7, 8, 9])
def test_many_sets_witness(m):
    inst = many_sets_witness(m)
    assert inst.m == m
    assert inst.size >= 2 * (m // 2) - 3
    assert check_system(inst).valid


@pytest.mark.parametrize("n,l", [(32, 2), (33, 3), (243, 3), (244, 4), (2000, 5), (10 ** 4, 7)])
def test_fifth_root_ceil(n, l):
    assert fifth_root_ceil(n) == l


def test_tsat_witness_2000():
    g = tsat_upper_witness(2000)
    assert g.n == 2000
    assert g.min_degree() == 6
    assert is_tsat_witness(g, 3)


@pytest.mark.slow
def test_tsat_witness_ten_thousand():
    g = tsat_upper_witness(10 ** 4)
    assert g.n == 10 ** 4
    assert is_tsat_witness(g, 3)


def test_tsat_witness_too_small():
    with pytest.raises(InfeasibleError, match="l=2"):
        tsat_upper_witness(30)


@pytest.mark.slow
def test_tsat_min_deg_witness():
    g = tsat_min_deg_upper_witness(3000, 3, 6)
    assert g.n == 3000
    assert is_tsat_witness(g, 3, t=6)


def test_tsat_min_deg_parameter_checks():
    with pytest.raises(ValueError, match="t >= r\\+3"):
        tsat_min_deg_upper_witness(3000, 3, 5)
    with pytest.raises(ValueError, match="r must be >= 3"):
        tsat_min_deg_upper_witness(3000, 2, 6)


def test_excess_constant():
    assert excess_constant(cycle_graph(5), 1, 1.0) == 0.0
    assert excess_constant(cycle_graph(5), 2, 0.5) == pytest.approx(-(5 ** 0.5))


def test_witness_excess_at_2000():
    g = tsat_upper_witness(2000)
    excess, constant = witness_excess(g, 6)
    assert excess == g.edge_count - 12000
    assert constant == pytest.approx(excess / 2000 ** 0.8)
