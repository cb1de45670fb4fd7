"""Exact independence number, maximum independent sets, maximal cliques."""

from __future__ import annotations

from typing import Iterator

from . import kernels
from .graphs import Graph


def independence_number(g: Graph) -> int:
    """Exact independence number via branch and bound."""
    return kernels.max_independent_set(g.n, g.adj)[0]


def max_independent_set(g: Graph) -> int:
    """A maximum independent set, as a vertex bitmask."""
    return kernels.max_independent_set(g.n, g.adj)[1]


def enumerate_cliques(g: Graph) -> Iterator[int]:
    """All maximal cliques as vertex bitmasks, each exactly once."""
    yield from kernels.maximal_cliques(g.n, g.adj)


def min_vertex_cover_size(g: Graph) -> int:
    """Size of a minimum vertex cover (= n - independence number)."""
    return g.n - independence_number(g)
