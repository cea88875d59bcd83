import networkx as nx
import pytest

from conftest import random_graph, to_nx
from graphs.bits import find_clique, has_clique, iter_bits, to_list, to_mask
from graphs.graph import (
    add_isolated,
    blow_up,
    complement,
    complete_bipartite,
    complete_graph,
    cone,
    contains_clique,
    cycle_graph,
    empty_graph,
    induced,
    is_twin_free,
    make_graph,
    path_graph,
    twin_partition,
    twin_quotient,
)
from graphs.canonical import are_isomorphic
from graphs.models import BlowUpSpec


def test_bits_helpers():
    assert to_list(to_mask([5, 0, 3])) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_make_graph_collapses_duplicates():
    g = make_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edge_count == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert list(g.missing_edges()) == [(0, 2)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_make_graph_rejects_bad_pairs(edges):
    with pytest.raises(ValueError, match=r"\[make_graph\]"):
        make_graph(3, edges)


def test_make_graph_rejects_negative_n():
    with pytest.raises(ValueError):
        make_graph(-1, [])


def test_contains_clique_small_cases():
    assert contains_clique(empty_graph(0), 0)
    assert not contains_clique(empty_graph(0), 1)
    assert contains_clique(empty_graph(3), 1)
    assert not contains_clique(empty_graph(3), 2)
    assert contains_clique(complete_graph(4), 4)
    assert not contains_clique(cycle_graph(5), 3)


def test_contains_clique_matches_networkx(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(4, 10), 0.5)
        omega = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
        assert contains_clique(g, omega)
        assert not contains_clique(g, omega + 1)


def test_find_clique_returns_a_clique():
    g = complete_graph(5)
    clique = find_clique(g.rows, g.vertex_mask, 3)
    assert len(clique) == 3 and clique == sorted(clique)
    assert has_clique(g.rows, 0, 0)
    assert not has_clique(g.rows, 0, 1)


def _is_clique(g, vertices):
    return all(g.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])


def test_find_clique_matches_networkx(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 14), rng.choice([0.3, 0.5, 0.7, 0.9]))
        omega = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
        for k in range(1, omega + 1):
            clique = find_clique(g.rows, g.vertex_mask, k)
            assert clique is not None and len(set(clique)) == k
            assert _is_clique(g, clique)
        assert find_clique(g.rows, g.vertex_mask, omega + 1) is None


def test_find_clique_stays_inside_candidates(rng):
    for _ in range(30):
        g = random_graph(rng, 10, 0.6)
        cand = to_mask(rng.sample(range(10), 6))
        sub = [v for v in range(10) if cand >> v & 1]
        omega = max((len(c) for c in nx.find_cliques(to_nx(g).subgraph(sub))), default=0)
        clique = find_clique(g.rows, cand, omega)
        assert set(clique) <= set(sub) and _is_clique(g, clique)
        assert find_clique(g.rows, cand, omega + 1) is None


def test_twin_partition_of_complete_bipartite():
    partition = twin_partition(complete_bipartite(2, 3))
    assert partition.classes == ((0, 1), (2, 3, 4))
    assert list(partition.twin_pairs()) == [(0, 1), (2, 3), (2, 4), (3, 4)]
    assert not partition.is_twin_free


def test_twin_free_examples():
    assert is_twin_free(cycle_graph(5))
    assert is_twin_free(complete_graph(4))
    assert not is_twin_free(path_graph(3))
    assert is_twin_free(empty_graph(0))


def test_blow_up_path_gives_four_cycle():
    g = blow_up(path_graph(3), [1, 2, 1])
    assert g.n == 4
    assert are_isomorphic(g, cycle_graph(4))


def test_blow_up_rejects_zero_multiplicity():
    with pytest.raises(ValueError, match="multiplicity"):
        blow_up(path_graph(3), [1, 0, 1])


def test_twin_quotient_round_trip(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        spec = [rng.randint(1, 3) for _ in range(g.n)]
        big = blow_up(g, spec)
        quotient, found = twin_quotient(big)
        assert is_twin_free(quotient)
        assert are_isomorphic(blow_up(quotient, found), big)


def test_twin_quotient_of_four_cycle():
    quotient, spec = twin_quotient(cycle_graph(4))
    assert quotient.n == 2 and quotient.edge_count == 1
    assert spec == BlowUpSpec(multiplicities=(2, 2))


def test_cone_adds_universal_vertices():
    g = cone(cycle_graph(5), 2)
    assert g.n == 7
    assert g.edge_count == 5 + 2 * 5 + 1
    assert g.degrees()[5:] == [6, 6]
    assert contains_clique(g, 4) and not contains_clique(g, 5)
    with pytest.raises(ValueError):
        cone(g, -1)


def test_complement_and_induced():
    g = path_graph(4)
    comp = complement(g)
    assert comp.edge_count == 6 - 3
    assert complement(comp) == g
    sub = induced(g, [3, 1, 2])
    assert sub == path_graph(3)
    with pytest.raises(ValueError, match="out of range"):
        induced(g, [7])


def test_add_isolated_and_relabel():
    g = add_isolated(path_graph(2), 2)
    assert g.n == 4 and g.degrees() == [1, 1, 0, 0]
    h = g.relabel([3, 2, 1, 0])
    assert h.has_edge(2, 3)
    with pytest.raises(ValueError):
        g.relabel([0, 0, 1, 2])
