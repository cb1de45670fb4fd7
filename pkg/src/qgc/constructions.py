"""Classical code constructions: quadratic residues, Paley graphs, bordered
codes, circulant searches, and nested regular graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .codes import GraphCode, graph_to_code, code_distance
from .graphs import Graph, bits, is_k_regular, local_complement, regular_degree


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- Legendre sequences and Paley graphs ------------------------------------


@dataclass(frozen=True)
class LegendreSequence:
    p: int
    bits: tuple[int, ...]


def quadratic_residues(p: int) -> set[int]:
    return {(y * y) % p for y in range(1, p)}


def legendre_sequence(p: int) -> LegendreSequence:
    """Binary sequence of length p with bit i = 1 iff i is a QR mod p."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    qr = quadratic_residues(p)
    return LegendreSequence(p, tuple(1 if i in qr else 0 for i in range(p)))


def _gf_p2_elements(p: int):
    """Multiplication in GF(p^2) = Z_p[x]/(f), f the lexicographically least
    monic irreducible quadratic x^2 + bx + c (ordered by (b, c)); the element
    a*x + b carries index a*p + b."""
    fb = fc = None
    for b in range(p):
        for c in range(p):
            # x^2 + b x + c irreducible iff it has no root mod p
            if all((t * t + b * t + c) % p for t in range(p)):
                fb, fc = b, c
                break
        if fb is not None:
            break

    def mul(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
        a1, b1 = u
        a2, b2 = v
        # (a1 x + b1)(a2 x + b2) with x^2 = -fb x - fc
        hi = a1 * a2
        mid = a1 * b2 + a2 * b1
        lo = b1 * b2
        return ((mid - hi * fb) % p, (lo - hi * fc) % p)

    return mul


def paley_graph(m: int) -> Graph:
    """Paley graph on GF(m), m a prime or prime square, m = 1 mod 4, m <= 32.

    Vertices i, j are joined iff i - j is a nonzero square; strongly regular
    with parameters (4t+1, 2t, t-1, t).
    """
    if m % 4 != 1 or m > 32:
        raise ValueError(f"unsupported Paley order {m}")
    if is_prime(m):
        seq = legendre_sequence(m).bits
        adj = [0] * m
        for i in range(m):
            for j in range(m):
                if seq[(i - j) % m]:
                    adj[i] |= 1 << j
        return Graph(m, tuple(adj))
    # prime square
    p = int(round(m ** 0.5))
    if p * p != m or not is_prime(p):
        raise ValueError(f"unsupported Paley order {m}")
    mul = _gf_p2_elements(p)
    squares = set()
    for a in range(p):
        for b in range(p):
            if (a, b) == (0, 0):
                continue
            sa, sb = mul((a, b), (a, b))
            squares.add(sa * p + sb)
    squares.discard(0)
    adj = [0] * m
    for i in range(m):
        ia, ib = divmod(i, p)
        for j in range(m):
            ja, jb = divmod(j, p)
            diff = ((ia - ja) % p) * p + ((ib - jb) % p)
            if diff in squares:
                adj[i] |= 1 << j
    return Graph(m, tuple(adj))


def is_strongly_regular(g: Graph) -> tuple[int, int, int, int] | None:
    """SRG parameters (n, k, lambda, mu), or None."""
    k = regular_degree(g)
    if k is None:
        return None
    lam = mu = None
    for i in range(g.n):
        for j in range(i + 1, g.n):
            common = (g.adj[i] & g.adj[j]).bit_count()
            if g.has_edge(i, j):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return (g.n, k, lam if lam is not None else 0, mu if mu is not None else 0)


# -- quadratic residue codes -------------------------------------------------


def border(g: Graph) -> Graph:
    """Cone: add a vertex joined to every existing vertex."""
    n = g.n
    adj = [g.adj[i] | (1 << n) for i in range(n)]
    adj.append((1 << n) - 1)
    return Graph(n + 1, tuple(adj))


def qr_code(m: int) -> GraphCode:
    """Graph code of the Paley graph of order m."""
    return graph_to_code(paley_graph(m))


def bordered_qr(m: int) -> GraphCode:
    """Bordered quadratic residue code of length m + 1: an all-ones border
    row/column with w in the corner, i.e. the cone over the Paley graph."""
    return graph_to_code(border(paley_graph(m)))


def bqr_regularize(m: int, vertex: int = 0) -> Graph:
    """LC on a non-border vertex of the bordered Paley graph; the result is
    (2t+1)-regular for m = 4t+1."""
    g = border(paley_graph(m))
    if vertex >= g.n - 1:
        raise ValueError("choose a non-border vertex")
    out = local_complement(g, vertex)
    t = (m - 1) // 4
    assert is_k_regular(out, 2 * t + 1)
    return out


# -- power-of-4 coset construction ([[17,0,7]] / [[18,0,8]]) -----------------


def power4_cosets(p: int) -> list[list[int]]:
    """Partition of Z_p \\ {0} into cosets of K = <4>, smallest leaders first."""
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"{p} must be a prime = 1 mod 4")
    k = []
    v = 1
    while v not in k:
        k.append(v)
        v = (v * 4) % p
    cosets = []
    covered: set[int] = set()
    for lead in range(1, p):
        if lead in covered:
            continue
        coset = sorted((lead * x) % p for x in k)
        cosets.append(coset)
        covered.update(coset)
    return cosets


def coset_circulants(p: int) -> list["CirculantRow"]:
    """Circulant rows from unions H = K u cK such that H and 2H partition
    Z_p \\ {0} and H is symmetric; the [[17,0,7]] construction and its
    generalisation."""
    cosets = power4_cosets(p)
    k = set(cosets[0])
    everything = set(range(1, p))
    out = []
    for other in cosets[1:]:
        h = k | set(other)
        if any((p - x) % p not in h for x in h):
            continue
        doubled = {(2 * x) % p for x in h}
        if h | doubled == everything and not h & doubled:
            mask = sum(1 << x for x in h)
            out.append(CirculantRow(p, mask))
    if not out:
        raise ValueError(f"no valid coset union for p={p}")
    return out


def code18() -> tuple[GraphCode, GraphCode]:
    """The length-17 circulant code from the power-of-4 construction and its
    bordered length-18 extension."""
    row = coset_circulants(17)[0]
    g = circulant_graph(row)
    return graph_to_code(g), graph_to_code(border(g))


# -- circulant graph codes ----------------------------------------------------


@dataclass(frozen=True)
class CirculantRow:
    """First row of a symmetric circulant adjacency matrix: an n-bit mask
    with bit 0 clear and bit i set iff bit n-i is set."""

    n: int
    mask: int

    def __post_init__(self):
        if self.mask & 1:
            raise ValueError("bit 0 of a circulant row must be clear")
        if self.mask >> self.n:
            raise ValueError("row mask has bits beyond n-1")
        for i in range(1, self.n):
            if ((self.mask >> i) & 1) != ((self.mask >> (self.n - i)) & 1):
                raise ValueError("circulant row is not symmetric")

    def __str__(self) -> str:
        return "w" + "".join(str((self.mask >> i) & 1) for i in range(1, self.n))


def circulant_row_from_text(text: str) -> CirculantRow:
    """Parse the printed form: 'w' (or the Greek letter) followed by n-1 bits."""
    t = text.strip()
    if t[:1] in ("w", "W", "ω"):
        t = t[1:]
    if not t or any(c not in "01" for c in t):
        raise ValueError(f"bad circulant row {text!r}")
    n = len(t) + 1
    mask = sum((c == "1") << (i + 1) for i, c in enumerate(t))
    return CirculantRow(n, mask)


def circulant_graph(row: CirculantRow) -> Graph:
    n = row.n
    adj = [0] * n
    for d in bits(row.mask):
        for i in range(n):
            j = (i + d) % n
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def symmetric_rows(n: int) -> Iterator[CirculantRow]:
    """All 2^ceil((n-1)/2) symmetric circulant first rows: one free bit per
    distance 1..floor(n/2) (distance n/2 pairs with itself when n is even)."""
    nfree = n // 2
    for m in range(1 << nfree):
        mask = 0
        for t in range(nfree):
            if (m >> t) & 1:
                d = t + 1
                mask |= (1 << d) | (1 << (n - d))
        yield CirculantRow(n, mask)


def _circulant_distance(row: CirculantRow) -> tuple[CirculantRow, int, int]:
    code = graph_to_code(circulant_graph(row))
    return row, code_distance(code), row.mask.bit_count()


def circulant_search(
    n: int, d_target: int | None = None, threads: int = 1
) -> list[tuple[CirculantRow, int, int]]:
    """Sweep all symmetric circulant first rows of length n.

    Returns (row, distance, degree) for rows meeting ``d_target``, or for
    the best distance found when no target is given.  Rows whose weight + 1
    is below the current best distance cannot improve (each row of the
    generator is a codeword) and are skipped.
    """
    if not 2 <= n <= 30:
        raise ValueError("supported circulant lengths are 2..30")
    best = 0
    hits: list[tuple[CirculantRow, int, int]] = []
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            scored = pool.map(_circulant_distance, symmetric_rows(n), chunksize=64)
            items = list(scored)
    else:

        def lazy():
            for row in symmetric_rows(n):
                deg = row.mask.bit_count()
                # each generator row is a codeword of weight deg + 1
                if d_target is None and deg + 1 < best:
                    continue
                if d_target is not None and deg + 1 < d_target:
                    continue
                yield _circulant_distance(row)

        items = lazy()
    for row, d, deg in items:
        if d_target is not None:
            if d >= d_target:
                hits.append((row, d, deg))
        elif d > best:
            best = d
            hits = [(row, d, deg)]
        elif d == best:
            hits.append((row, d, deg))
    return hits


def best_circulant(n: int) -> tuple[CirculantRow, int, int]:
    """Best-distance circulant of length n, ties broken by lowest degree then
    numerically least row mask."""
    hits = circulant_search(n)
    return min(hits, key=lambda h: (h[2], h[0].mask))


# -- nested regular graphs ----------------------------------------------------


@dataclass(frozen=True)
class NestedSpec:
    """Recursive block structure R^{k_1}_{n_1}[ ... [R^{k_l}_{n_l}] ].

    ``layers`` lists (n_i, k_i) pairs outermost first; a layer with
    k = n - 1 is a clique layer.  ``blocks`` optionally pins the concrete
    regular graph used at each layer (required when R^k_n is ambiguous);
    cliques (k = n-1), cycles (k = 2) and edgeless layers (k = 0) are
    filled in automatically.  ``matchings`` maps (level, i, j) with i < j
    to the bijection block_i -> block_j used when blowing level ``level``
    (1-based, outermost quotient expanded first) up along quotient edge
    (i, j).  Unspecified pairs default to the single-rotation matching
    a -> a + (j - i) mod n_level.  The plan actually used is recorded on
    the result of :func:`nested_build`.
    """

    layers: tuple[tuple[int, int], ...]
    blocks: tuple[Graph | None, ...] = None  # type: ignore[assignment]
    matchings: dict[tuple[int, int, int], tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.blocks is None:
            object.__setattr__(self, "blocks", (None,) * len(self.layers))
        if len(self.blocks) != len(self.layers):
            raise ValueError("one block graph per layer required")
        for (nl, kl), blk in zip(self.layers, self.blocks):
            if blk is not None:
                if blk.n != nl or not is_k_regular(blk, kl):
                    raise ValueError(f"block graph is not a {kl}-regular graph on {nl}")

    def total_vertices(self) -> int:
        t = 1
        for nl, _ in self.layers:
            t *= nl
        return t


def _layer_graph(nl: int, kl: int, blk: Graph | None) -> Graph:
    if blk is not None:
        return blk
    if kl == nl - 1:
        return Graph.complete(nl)
    if kl == 2:
        return Graph.cycle(nl)
    if kl == 0:
        return Graph.empty(nl)
    raise ValueError(f"ambiguous regular block R^{kl}_{nl}: supply the graph")


def nested_build(spec: NestedSpec) -> tuple[Graph, dict[tuple[int, int, int], tuple[int, ...]]]:
    """Build a nested regular graph and return (graph, plan used).

    Level by level, every quotient vertex blows up into a copy of the next
    layer's regular block; each quotient edge (i, j) becomes the perfect
    matching given by the connection plan.  Blocks occupy consecutive
    vertex ranges, so block b of the final level is vertices
    [b*n_l, (b+1)*n_l).
    """
    plan: dict[tuple[int, int, int], tuple[int, ...]] = {}
    quotient = _layer_graph(*spec.layers[0], spec.blocks[0])
    for level in range(1, len(spec.layers)):
        nl, kl = spec.layers[level]
        layer = _layer_graph(nl, kl, spec.blocks[level])
        m = quotient.n
        edges = []
        for bi in range(m):
            base = bi * nl
            edges.extend((base + u, base + v) for u, v in layer.edges())
        for bi, bj in quotient.edges():
            sigma = spec.matchings.get((level, bi, bj))
            if sigma is None:
                shift = (bj - bi) % nl
                sigma = tuple((a + shift) % nl for a in range(nl))
            if sorted(sigma) != list(range(nl)):
                raise ValueError(f"matching for blocks ({bi},{bj}) is not a bijection")
            plan[(level, bi, bj)] = tuple(sigma)
            edges.extend((bi * nl + a, bj * nl + sigma[a]) for a in range(nl))
        quotient = Graph.from_edges(m * nl, edges)
    return quotient, plan


def nested_validate(g: Graph, partition: Sequence[int], spec: NestedSpec) -> bool:
    """Check a claimed innermost partition against the spec.

    Each block must induce the layer's regular graph order/degree, every
    inter-block edge set must be empty or a perfect matching, all edges
    must be accounted for, and the quotient graph must recursively match
    the outer layers.  Partition blocks must be ordered so that quotient
    blocks at the next level are consecutive runs.
    """
    from .graphs import induced_subgraph

    nl, kl = spec.layers[-1]
    blocks = list(partition)
    cover = 0
    for b in blocks:
        if b.bit_count() != nl or cover & b:
            return False
        cover |= b
    if cover != (1 << g.n) - 1:
        return False
    for b in blocks:
        if not is_k_regular(induced_subgraph(g, b), kl):
            return False
    m = len(blocks)
    qedges = []
    for i in range(m):
        vi = sorted(bits(blocks[i]))
        for j in range(i + 1, m):
            vj = set(bits(blocks[j]))
            cross = [(u, v) for u in vi for v in vj if g.has_edge(u, v)]
            if not cross:
                continue
            if len(cross) != nl:
                return False
            if len({u for u, _ in cross}) != nl or len({v for _, v in cross}) != nl:
                return False
            qedges.append((i, j))
    inner_edges = sum(induced_subgraph(g, b).edge_count() for b in blocks)
    if inner_edges + nl * len(qedges) != g.edge_count():
        return False
    if len(spec.layers) == 1:
        return m == 1 and not qedges
    quotient = Graph.from_edges(m, qedges) if m > 1 else Graph.empty(1)
    if len(spec.layers) == 2:
        nq, kq = spec.layers[0]
        return m == nq and is_k_regular(quotient, kq)
    outer = NestedSpec(spec.layers[:-1], spec.blocks[:-1])
    nl_outer = spec.layers[-2][0]
    if m % nl_outer:
        return False
    qpart = [
        sum(1 << v for v in range(start, start + nl_outer))
        for start in range(0, m, nl_outer)
    ]
    return nested_validate(quotient, qpart, outer)


def minimum_regular_vertex_degree(g: Graph, d: int) -> bool:
    """True iff g is regular of degree d-1, or regular of degree d when
    n odd and d even make degree d-1 impossible."""
    deg = regular_degree(g)
    if deg is None:
        return False
    if deg == d - 1:
        return True
    return deg == d and g.n % 2 == 1 and d % 2 == 0
