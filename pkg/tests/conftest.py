"""Shared test helpers: random graph generators and small-graph populations."""

import os
import random
from itertools import combinations

import networkx as nx
import pytest

from signednut import SignedGraph

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture_path(rho: int, n: int) -> str:
    return os.path.join(FIXTURES, "reg", str(rho), f"{n}.g6")


def load_fixture(rho: int, n: int) -> list[SignedGraph]:
    from signednut import parse_graph6

    with open(fixture_path(rho, n)) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    """Random unsigned (all-positive) graph on n vertices."""
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return SignedGraph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def random_signing(rng: random.Random, g: SignedGraph) -> SignedGraph:
    signs = tuple(rng.choice((1, -1)) for _ in g.edges)
    return SignedGraph(g.order, g.edges, signs)


def all_connected_graphs(max_n: int) -> list[SignedGraph]:
    """Every connected graph on 2..max_n vertices (one per isomorphism
    class), from the atlas of small graphs."""
    assert max_n <= 7
    out = []
    for ag in nx.graph_atlas_g():
        n = ag.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(ag):
            out.append(SignedGraph.from_edges(n, list(ag.edges())))
    return out


def all_signings(g: SignedGraph):
    m = len(g.edges)
    for mask in range(1 << m):
        signs = tuple(-1 if (mask >> (m - 1 - i)) & 1 else 1 for i in range(m))
        yield SignedGraph(g.order, g.edges, signs)


def cycle(n: int, negative=()) -> SignedGraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return SignedGraph.from_edges(n, edges, negative)


def complete(n: int, negative=()) -> SignedGraph:
    return SignedGraph.from_edges(n, combinations(range(n), 2), negative)


def path(n: int) -> SignedGraph:
    return SignedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def rng():
    return random.Random(20260823)
