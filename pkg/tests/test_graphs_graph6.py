import networkx as nx
import pytest

from conftest import random_graph, to_nx
from graphs.graph import complete_graph, cycle_graph, empty_graph
from graphs.graph6 import (
    ParseError,
    decode_graph,
    decode_graph6,
    decode_sparse6,
    encode_graph6,
    encode_sparse6,
)
from search.enumerate import CliqueFree, enumerate_graphs


@pytest.mark.parametrize("n", [0, 1, 2, 5, 7, 12, 62, 63, 70])
def test_graph6_matches_networkx(rng, n):
    g = random_graph(rng, n, 0.4)
    assert encode_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_graph6_decodes_networkx_output(rng):
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 15), 0.5)
        data = nx.to_graph6_bytes(to_nx(g), header=True)
        assert decode_graph6(data) == g


def test_small_known_encodings():
    assert encode_graph6(empty_graph(0)) == b"?"
    assert encode_graph6(complete_graph(2)) == b"A_"
    assert decode_graph("A_") == complete_graph(2)


def test_body_length_error_reports_offset():
    with pytest.raises(ParseError) as info:
        decode_graph6("D?")
    assert info.value.offset == 2
    assert "expected 2" in str(info.value)


def test_invalid_byte_reports_offset():
    with pytest.raises(ParseError) as info:
        decode_graph6(b"D h")
    assert info.value.offset == 1


def test_header_shifts_offsets():
    with pytest.raises(ParseError) as info:
        decode_graph6(b">>graph6<<D?")
    assert info.value.offset == 12


@pytest.mark.parametrize("data", ["", "~", "~~??"])
def test_truncated_input(data):
    with pytest.raises(ParseError):
        decode_graph6(data)


def test_sparse6_through_decode_graph(rng):
    g = random_graph(rng, 11, 0.3)
    data = encode_sparse6(g)
    assert data.startswith(b":")
    assert decode_graph(data) == g
    assert decode_graph(b">>sparse6<<" + data) == g


def test_sparse6_errors():
    with pytest.raises(ParseError, match="leading"):
        decode_sparse6("Dhc")
    with pytest.raises(ParseError, match="directed"):
        decode_graph("&Dhc")


def test_cycle_graph6_decodes_to_cycle():
    g = cycle_graph(5)
    assert decode_graph(encode_graph6(g).decode()) == g


def _round_trips(g):
    data = encode_graph6(g)
    assert decode_graph6(data) == g
    assert decode_graph(data) == g
    assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    if g.n > 1:
        assert decode_graph(encode_sparse6(g)) == g


@pytest.mark.parametrize("n", range(0, 8))
def test_round_trip_over_all_graphs(n):
    for g in enumerate_graphs(n):
        _round_trips(g)


@pytest.mark.slow
def test_round_trip_over_all_graphs_on_eight_vertices():
    for g in enumerate_graphs(8):
        _round_trips(g)


@pytest.mark.parametrize("n", [8, 9])
def test_round_trip_over_triangle_free_graphs(n):
    for g in enumerate_graphs(n, CliqueFree(3)):
        _round_trips(g)
