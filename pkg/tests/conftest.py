import random

import networkx as nx
import pytest

from config import Config
from graphs.graph import Graph, disjoint_union, empty_graph, make_graph
from search.enumerate import clear_cache
from search.models import EnumerationBudget
from systems.models import SystemInstance, VertexSetFamily


def to_nx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_triangle_free(rng: random.Random, n: int, tries: int = 40) -> Graph:
    """Random maximal-ish triangle-free graph: add random pairs while no triangle appears."""
    rows = [0] * n
    for _ in range(tries):
        u, v = rng.sample(range(n), 2)
        if rows[u] >> v & 1 or rows[u] & rows[v]:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def two_k2_k1():
    """2K2 + K1: edges 0-1 and 2-3, vertex 4 isolated."""
    return disjoint_union(make_graph(4, [(0, 1), (2, 3)]), empty_graph(1))


@pytest.fixture
def four_set_system(two_k2_k1):
    """The (3,3)-system with all four maximal independent 3-sets of 2K2 + K1."""
    family = VertexSetFamily.of([(0, 2, 4), (0, 3, 4), (1, 2, 4), (1, 3, 4)])
    return SystemInstance(host=two_k2_k1, family=family, r=3, t=3)


@pytest.fixture
def small_budget():
    return EnumerationBudget(max_vertices=7, max_free_vertices=8, max_edges=10)


@pytest.fixture
def cli_config(tmp_path):
    return Config(
        cache_path=str(tmp_path / "cache.jsonl"),
        reports_dir=str(tmp_path / "reports"),
        log_level="INFO",
        log_file="",
        workers=1,
    )


@pytest.fixture(autouse=True, scope="session")
def _fresh_levels():
    clear_cache()
    yield
    clear_cache()
