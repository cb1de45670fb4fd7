"""Canonical forms for graphs and hypergraphs.

The canonical form of a graph is the lexicographically least graph6
encoding over all vertex labelings (cell-respecting labelings when an
initial partition is given).  Isomorphic inputs therefore produce
identical byte strings, and the minimum is taken over the full labeling
space, so the result agrees with a brute-force all-permutations search.

Hypergraphs are canonised through their vertex/edge incidence graph with
a two-cell partition separating original vertices from edge vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import Graph, bits, from_graph6, relabel


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical byte encoding plus the relabeling that produces it."""

    code: bytes
    perm: tuple[int, ...]

    def graph(self) -> Graph:
        return from_graph6(self.code)


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set 0..n-1 with edges of size >= 2 (frozensets)."""

    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"hyperedge {set(e)} has fewer than 2 vertices")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError(f"hyperedge {set(e)} outside vertex range")

    @staticmethod
    def from_edges(n: int, edges) -> "Hypergraph":
        return Hypergraph(n, frozenset(frozenset(e) for e in edges))

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def canonical_form(g: Graph, partition: list[int] | None = None) -> CanonicalForm:
    """Canonical form of a graph; ``partition`` is a list of disjoint vertex
    bitmasks that together cover all vertices (labels may only be exchanged
    within a cell)."""
    colors = None
    if partition is not None:
        colors = [-1] * g.n
        seen = 0
        for idx, cell in enumerate(partition):
            if cell & seen:
                raise ValueError("partition cells overlap")
            seen |= cell
            for v in bits(cell):
                if v >= g.n:
                    raise ValueError("partition cell outside vertex range")
                colors[v] = idx
        if seen != (1 << g.n) - 1:
            raise ValueError("partition does not cover all vertices")
    code, perm = kernels.canon_graph(g.n, g.adj, colors)
    return CanonicalForm(code=code, perm=perm)


def canonical_key(g: Graph) -> bytes:
    """Just the canonical graph6 bytes (the dedup key used everywhere)."""
    return kernels.canon_graph(g.n, g.adj, None)[0]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n:
        return False
    return canonical_key(a) == canonical_key(b)


def incidence_graph(h: Hypergraph) -> tuple[Graph, list[int]]:
    """Map a hypergraph to its incidence graph plus a 2-cell partition.

    Plain 2-edges stay direct edges; each edge of size >= 3 becomes an
    extra vertex joined to its members.  Returns the graph and the
    partition [original vertices, edge vertices].
    """
    hyper = [e for e in h.sorted_edges() if len(e) >= 3]
    m = len(hyper)
    n = h.n
    edges = []
    for e in h.sorted_edges():
        if len(e) == 2:
            edges.append((e[0], e[1]))
    for i, e in enumerate(hyper):
        edges.extend((v, n + i) for v in e)
    g = Graph.from_edges(n + m, edges) if n + m > 0 else Graph.empty(1)
    part = [(1 << n) - 1]
    if m:
        part.append(((1 << m) - 1) << n)
    return g, part


def hypergraph_canonical(h: Hypergraph) -> tuple[Hypergraph, tuple[int, ...]]:
    """Canonical representative of a hypergraph and the vertex relabeling.

    Isomorphic hypergraphs yield identical representatives.
    """
    g, part = incidence_graph(h)
    cf = canonical_form(g, part)
    cg = cf.graph()
    n = h.n
    edges = set()
    # direct edges among original vertices
    for i in range(n):
        for j in range(i + 1, n):
            if cg.has_edge(i, j):
                edges.add(frozenset((i, j)))
    # hyperedges from edge-vertex neighbourhoods
    for ev in range(n, cg.n):
        edges.add(frozenset(bits(cg.adj[ev])))
    perm = tuple(cf.perm[v] for v in range(n))
    return Hypergraph(n, frozenset(edges)), perm


def hypergraph_key(h: Hypergraph) -> bytes:
    """Byte key identifying the hypergraph isomorphism class."""
    ch, _ = hypergraph_canonical(h)
    parts = [f"{ch.n}"] + [",".join(map(str, e)) for e in ch.sorted_edges()]
    return ";".join(parts).encode()


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled graph itself."""
    cf = canonical_form(g)
    return relabel(g, cf.perm)
