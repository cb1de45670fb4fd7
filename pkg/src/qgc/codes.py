"""Self-dual additive codes over GF(4) in binary (Z|X) stabilizer form.

GF(4) = {0, 1, w, w2} with w2 = w + 1 is encoded as a (z, x) bit pair:
0=(0,0), 1=(1,0), w=(0,1), w2=(1,1).  Addition is componentwise XOR,
conjugation squares (swaps w and w2), and the trace sends w, w2 to 1.
A length-n codeword is a pair of n-bit masks (z, x); its weight is
popcount(z | x).  Graph codes have generator Z = adjacency matrix,
X = identity, i.e. generator matrix "Gamma + w I".
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import Graph, bits

# -- GF(4) scalar arithmetic (ints 0..3 with z = bit0, x = bit1) -----------

GF4_ZERO, GF4_ONE, GF4_W, GF4_W2 = 0, 1, 2, 3

_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

_SYMBOLS = "01wW"


def gf4_mul(a: int, b: int) -> int:
    return _MUL[a][b]


def gf4_conj(a: int) -> int:
    """Conjugation x -> x^2 (swaps w and w2)."""
    return a if a < 2 else 5 - a


def gf4_trace(a: int) -> int:
    """tr(x) = x + x^2, landing in GF(2)."""
    return a >> 1


def trace_inner_product(u: list[int], v: list[int]) -> int:
    """Sum of tr(u_i * conj(v_i)) mod 2, on symbol lists."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(gf4_trace(gf4_mul(a, gf4_conj(b))) for a, b in zip(u, v)) & 1


def trace_inner_product_rows(u: tuple[int, int], v: tuple[int, int]) -> int:
    """Same product on (z_mask, x_mask) row pairs: parity of
    |u.z & v.x| + |u.x & v.z|."""
    uz, ux = u
    vz, vx = v
    return ((uz & vx).bit_count() + (ux & vz).bit_count()) & 1


# -- stabilizer codes -------------------------------------------------------


@dataclass(frozen=True)
class StabilizerCode:
    """Self-dual additive code given by n generator rows (z_mask, x_mask)."""

    n: int
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("self-dual code needs n generator rows")

    def validate(self) -> None:
        """Check GF(2)-independence and self-duality of the generators."""
        vecs = [(z << self.n) | x for z, x in self.rows]
        basis: list[int] = []
        for v in vecs:
            for b in basis:
                v = min(v, v ^ b)
            if v == 0:
                raise ValueError("generator rows are GF(2)-dependent")
            basis.append(v)
            basis.sort(reverse=True)
        for i in range(self.n):
            for j in range(i, self.n):
                if trace_inner_product_rows(self.rows[i], self.rows[j]):
                    raise ValueError(f"rows {i},{j} are not trace-orthogonal")

    def symbol_matrix(self) -> list[list[int]]:
        out = []
        for z, x in self.rows:
            out.append([((z >> c) & 1) | (((x >> c) & 1) << 1) for c in range(self.n)])
        return out

    def codewords(self):
        """All 2^n codewords as (z, x) pairs (for small n)."""
        for mask in range(1 << self.n):
            z = x = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    z ^= self.rows[i][0]
                    x ^= self.rows[i][1]
                m >>= 1
                i += 1
            yield z, x


class GraphCode(StabilizerCode):
    """Stabilizer code in graph form: Z = adjacency matrix, X = identity."""

    def __init__(self, graph: Graph):
        rows = tuple((graph.adj[i], 1 << i) for i in range(graph.n))
        super().__init__(n=graph.n, rows=rows)
        object.__setattr__(self, "graph", graph)


def graph_to_code(g: Graph) -> GraphCode:
    return GraphCode(g)


def code_graph(c: GraphCode) -> Graph:
    return c.graph


# -- conversion of an arbitrary stabilizer code to graph form ---------------


def _gf2_solve(mat: list[int], n: int):
    """Row-reduce an n x n GF(2) matrix (rows as masks).  Returns
    (rank, pivot_cols, inverse_rows or None)."""
    rows = list(mat)
    inv = [1 << i for i in range(n)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((k for k in range(r, n) if (rows[k] >> c) & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv[r], inv[pivot] = inv[pivot], inv[r]
        for k in range(n):
            if k != r and (rows[k] >> c) & 1:
                rows[k] ^= rows[r]
                inv[k] ^= inv[r]
        pivots.append(c)
        r += 1
    if r < n:
        return r, pivots, None
    # rows is now a permutation matrix: unscramble the inverse
    inverse = [0] * n
    for k in range(n):
        c = rows[k].bit_length() - 1
        inverse[c] = inv[k]
    return r, pivots, inverse


def _transpose(mat: list[int], n: int) -> list[int]:
    out = [0] * n
    for i in range(n):
        row = mat[i]
        for j in bits(row):
            out[j] |= 1 << i
    return out


def _matmul(a: list[int], b: list[int], n: int) -> list[int]:
    bt = _transpose(b, n)
    return [
        sum((((a[i] & bt[j]).bit_count() & 1) << j) for j in range(n))
        for i in range(n)
    ]


def stabilizer_to_graph(s: StabilizerCode) -> Graph:
    """Graph of an equivalent graph code.

    With Z, X the n x n bit matrices of the generators, the transposed
    stabilizer (A over B) = (Z^T over X^T) right-multiplied by B^-1 gives
    (A B^-1 over I) when B is invertible; A B^-1 with its diagonal zeroed
    is the adjacency matrix.  When B is singular, single-qubit Hadamard
    conversions (z/x swap of a column) on a pivot-completing column set are
    applied first, taking the smallest-index completing columns.
    """
    n = s.n
    a = _transpose([z for z, _ in s.rows], n)  # row c = column c of Z
    b = _transpose([x for _, x in s.rows], n)  # row c = column c of X

    basis: list[int] = []

    def reduce_vec(v: int) -> int:
        for bb in basis:
            v = min(v, v ^ bb)
        return v

    independent = []
    for c in range(n):
        v = reduce_vec(b[c])
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            independent.append(c)
    if len(independent) < n:
        # swap in Z columns at the smallest non-pivot indices that extend
        # the span (always possible for self-dual input)
        for c in range(n):
            if c in independent:
                continue
            v = reduce_vec(a[c])
            if v:
                basis.append(v)
                basis.sort(reverse=True)
                a[c], b[c] = b[c], a[c]
            if len(basis) == n:
                break
        if len(basis) < n:
            raise ValueError("no pivot-completing column set (input not self-dual?)")
    rank, _, binv = _gf2_solve(b, n)
    if binv is None:
        raise ValueError("pivot completion failed (input not self-dual?)")
    gamma = _matmul(a, binv, n)
    # the result must be symmetric apart from the diagonal
    adj = [gamma[i] & ~(1 << i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if ((adj[i] >> j) & 1) != ((adj[j] >> i) & 1):
                raise ValueError("conversion produced a non-symmetric matrix")
    return Graph(n, tuple(adj))


# -- distance / weights / type ----------------------------------------------


def code_distance(c: GraphCode) -> int:
    """Minimum nonzero codeword weight, via sums of i = 1, 2, ... rows with
    early exit (a sum of k rows has weight >= k)."""
    return kernels.graph_code_distance(c.n, [z for z, _ in c.rows])


def partial_weight_distribution(c: GraphCode, p: int) -> tuple[int, ...]:
    """Counts (w_0..w_p) of codewords of weight <= p."""
    if not 0 <= p <= c.n:
        raise ValueError(f"cutoff {p} outside 0..{c.n}")
    return tuple(kernels.graph_code_weight_hist(c.n, [z for z, _ in c.rows], p))


def weight_count(c: GraphCode, p: int) -> int:
    """w_p, the number of codewords of weight exactly p."""
    return partial_weight_distribution(c, p)[p]


def full_weight_distribution(c: GraphCode) -> tuple[int, ...]:
    return partial_weight_distribution(c, c.n)


TYPE_I = "I"
TYPE_II = "II"


def code_type(c: StabilizerCode) -> str:
    """Type II iff every codeword has even weight.

    Weight parity is additive on a self-orthogonal code (the trace inner
    product of two codewords equals the parity of the positions where they
    differ with both nonzero), so it suffices to check the generator rows.
    """
    for z, x in c.rows:
        if (z | x).bit_count() & 1:
            return TYPE_I
    return TYPE_II


# -- bounds ------------------------------------------------------------------


def distance_bound(n: int, type_: str) -> int:
    """Upper bound on the distance of a self-dual code of the given type."""
    if type_ == TYPE_II:
        if n % 2:
            raise ValueError("type II codes must have even length")
        return 2 * (n // 6) + 2
    if n % 6 == 0:
        return 2 * (n // 6) + 1
    if n % 6 == 5:
        return 2 * (n // 6) + 3
    return 2 * (n // 6) + 2


# Highest attainable distance d_m for self-dual additive codes of length n,
# as (low, high); entries with low < high are open ranges.
_DM_TABLE: dict[int, tuple[int, int]] = {
    2: (2, 2), 3: (2, 2), 4: (2, 2), 5: (3, 3), 6: (4, 4), 7: (3, 3),
    8: (4, 4), 9: (4, 4), 10: (4, 4), 11: (5, 5), 12: (6, 6), 13: (5, 5),
    14: (6, 6), 15: (6, 6), 16: (6, 6), 17: (7, 7), 18: (8, 8), 19: (7, 7),
    20: (8, 8), 21: (8, 8), 22: (8, 8), 23: (8, 9), 24: (8, 10), 25: (8, 9),
    26: (8, 10), 27: (9, 10), 28: (10, 10), 29: (11, 11), 30: (12, 12),
}


def best_known_dm(n: int) -> tuple[int, int]:
    """Best known achievable distance for length n, as a (low, high) range."""
    if n not in _DM_TABLE:
        raise ValueError(f"no table entry for n={n} (2..30 supported)")
    return _DM_TABLE[n]


# -- Z4 image ----------------------------------------------------------------


def to_z4(c: GraphCode) -> list[list[int]]:
    """Z4 generator matrix 2*Gamma + I (symbol map 0->0, 1->2, w->1, w2->3);
    GF(2) combinations of its rows have the same weights as the code."""
    g = c.graph
    return [
        [(2 * ((g.adj[i] >> j) & 1) + (1 if i == j else 0)) % 4 for j in range(g.n)]
        for i in range(g.n)
    ]


# -- shortening ---------------------------------------------------------------


def shorten(s: StabilizerCode, coord: int) -> StabilizerCode:
    """Self-dual code of length n-1: keep codewords whose symbol at ``coord``
    lies in {0, w}, then drop the coordinate."""
    n = s.n
    if not 0 <= coord < n:
        raise ValueError("coordinate out of range")
    # condition tr(c * conj(w)) = 0 at coord, i.e. the z bit at coord is 0
    ones = [r for r in s.rows if (r[0] >> coord) & 1]
    zeros = [r for r in s.rows if not (r[0] >> coord) & 1]
    gens = list(zeros)
    if ones:
        head = ones[0]
        gens.extend((z ^ head[0], x ^ head[1]) for z, x in ones[1:])
    lo = (1 << coord) - 1

    def drop(mask: int) -> int:
        return (mask & lo) | ((mask >> (coord + 1)) << coord)

    rows = tuple((drop(z), drop(x)) for z, x in gens)
    out = StabilizerCode(n - 1, rows)
    out.validate()
    return out


# -- text formats -------------------------------------------------------------


def generator_to_text(s: StabilizerCode) -> str:
    """n lines of n symbols from {0,1,w,W} (W = w^2)."""
    return "\n".join(
        "".join(_SYMBOLS[v] for v in row) for row in s.symbol_matrix()
    ) + "\n"


def generator_from_text(text: str) -> StabilizerCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = len(lines)
    rows = []
    for ln in lines:
        if len(ln) != n:
            raise ValueError(f"generator row {ln!r} is not length {n}")
        z = x = 0
        for c, ch in enumerate(ln):
            try:
                v = _SYMBOLS.index(ch)
            except ValueError as exc:
                raise ValueError(f"bad symbol {ch!r} in generator matrix") from exc
            z |= (v & 1) << c
            x |= (v >> 1) << c
        rows.append((z, x))
    return StabilizerCode(n, tuple(rows))


def stabilizer_to_text(s: StabilizerCode) -> str:
    """Binary 'Z|X' rows of 0/1."""
    lines = []
    for z, x in s.rows:
        zs = "".join(str((z >> c) & 1) for c in range(s.n))
        xs = "".join(str((x >> c) & 1) for c in range(s.n))
        lines.append(f"{zs}|{xs}")
    return "\n".join(lines) + "\n"


def stabilizer_from_text(text: str) -> StabilizerCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = len(lines)
    rows = []
    for ln in lines:
        if "|" not in ln:
            raise ValueError(f"stabilizer row {ln!r} lacks the Z|X separator")
        zs, xs = ln.split("|", 1)
        if len(zs) != n or len(xs) != n:
            raise ValueError(f"stabilizer row {ln!r} is not length {n}|{n}")
        z = sum((zs[c] == "1") << c for c in range(n))
        x = sum((xs[c] == "1") << c for c in range(n))
        rows.append((z, x))
    return StabilizerCode(n, tuple(rows))
