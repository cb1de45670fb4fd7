"""Simple undirected graphs on up to 32 vertices, stored as adjacency bitmasks.

Row ``i`` of ``Graph.adj`` has bit ``j`` set iff ``{i,j}`` is an edge.  All
operations are pure: they return new graphs and never mutate.  Vertex sets
are plain ints used as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 32


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex {self.n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.adj[i] >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bad edge ({i},{j})")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return Graph(n, tuple(adj))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << i) for i in range(n)))

    @staticmethod
    def cycle(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- basic queries -----------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (self.adj[i] >> j) & 1
        ]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def neighbourhood(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced by the neighbourhood of v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    nv = g.adj[v]
    adj = list(g.adj)
    for u in bits(nv):
        # toggle u's adjacency to the other neighbours of v
        adj[u] ^= nv & ~(1 << u)
    return Graph(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << i) for i, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: int) -> Graph:
    """Induced subgraph on a vertex bitmask, relabeled to 0..k-1 in ascending
    order of the original indices."""
    if vertices & ~((1 << g.n) - 1):
        raise ValueError("vertex set not within the graph")
    keep = list(bits(vertices))
    k = len(keep)
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * k
    for v in keep:
        for u in bits(g.adj[v] & vertices):
            adj[pos[v]] |= 1 << pos[u]
    return Graph(k, tuple(adj))


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def degree_sequence(g: Graph) -> list[int]:
    return sorted((row.bit_count() for row in g.adj), reverse=True)


def is_k_regular(g: Graph, k: int) -> bool:
    return all(row.bit_count() == k for row in g.adj)


def regular_degree(g: Graph) -> int | None:
    """The common vertex degree, or None if the graph is not regular."""
    degs = {row.bit_count() for row in g.adj}
    return degs.pop() if len(degs) == 1 else None


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply a permutation: vertex v gets new label perm[v]."""
    p = list(perm)
    adj = [0] * g.n
    for i in range(g.n):
        for j in bits(g.adj[i]):
            adj[p[i]] |= 1 << p[j]
    return Graph(g.n, tuple(adj))


def extensions(g: Graph) -> Iterator[Graph]:
    """All 2^n - 1 one-vertex extensions: new vertex joined to each nonempty
    subset of the old vertices."""
    if g.n >= MAX_VERTICES:
        raise ValueError("extension would exceed the 32-vertex limit")
    n = g.n
    for s in range(1, 1 << n):
        adj = [g.adj[i] | (((s >> i) & 1) << n) for i in range(n)]
        adj.append(s)
        yield Graph(n + 1, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise ValueError("union exceeds the 32-vertex limit")
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(adj))


# -- graph6 and edge-list formats -----------------------------------------


def to_graph6(g: Graph) -> bytes:
    """graph6 bytes: header byte n+63, then the upper triangle in column
    order x(0,1), x(0,2), x(1,2), ... packed big-endian into 6-bit groups."""
    out = [g.n + 63]
    acc = 0
    nb = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.strip().encode()
    if not data:
        raise ValueError("empty graph6 data")
    n = data[0] - 63
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits_ = []
    for c in body:
        v = c - 63
        if not 0 <= v < 64:
            raise ValueError("graph6 byte out of range")
        bits_.extend((v >> (5 - t)) & 1 for t in range(6))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits_[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_edge_list(g: Graph) -> str:
    """Plain text: 'n m' header line then one 'i j' line per edge."""
    es = g.edges()
    lines = [f"{g.n} {len(es)}"]
    lines.extend(f"{i} {j}" for i, j in es)
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge list")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad edge-list header: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        i, j = map(int, ln.split())
        edges.append((i, j))
    return Graph.from_edges(n, edges)
