import random
from itertools import permutations

import pytest

from qgc.graphs import Graph, relabel, to_graph6


def random_graph(n, p=0.5, rng=None):
    rng = rng or random
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def brute_force_min_g6(g: Graph) -> bytes:
    """Minimum graph6 encoding over all n! relabelings."""
    best = None
    for p in permutations(range(g.n)):
        enc = to_graph6(relabel(g, p))
        if best is None or enc < best:
            best = enc
    return best


def all_graphs(n):
    """Every labeled graph on n vertices (use only for small n)."""
    m = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << m):
        edges = [pairs[b] for b in range(m) if (mask >> b) & 1]
        yield Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(12345)
