"""Boolean functions: truth tables, ANF, spectra, autocorrelations and the
aperiodic propagation criterion.

Truth tables use the little-endian variable packing x = (x_0,...,x_{n-1})
-> index sum 2^i x_i, matching monomial numbering: ANF coefficient k
multiplies the product of the x_i with bit i of k set.  Tables and ANF
vectors are stored as int bitmasks (bit i = value at index i); spectra and
autocorrelations are kept in exact integer form wherever possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .canon import Hypergraph
from .graphs import Graph, bits


def _anft_mask(table: int, n: int) -> int:
    """Self-inverse mod-2 transform between truth table and ANF (butterfly
    on the int bitmask)."""
    size = 1 << n
    full = (1 << size) - 1
    for i in range(n):
        step = 1 << i
        # mask of indices whose bit i is zero
        block = ((1 << step) - 1)
        pattern = 0
        pos = 0
        while pos < size:
            pattern |= block << pos
            pos += 2 * step
        table ^= ((table & pattern) << step) & full
    return table


@dataclass(frozen=True)
class BooleanFunction:
    """Boolean function of n variables, stored as a truth-table bitmask."""

    n: int
    table: int

    def __post_init__(self):
        if self.table >> (1 << self.n):
            raise ValueError("truth table longer than 2^n")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_anf_mask(n: int, anf: int) -> "BooleanFunction":
        return BooleanFunction(n, _anft_mask(anf, n))

    @staticmethod
    def from_monomials(n: int, monomials) -> "BooleanFunction":
        anf = 0
        for mono in monomials:
            k = 0
            for v in mono:
                if not 0 <= v < n:
                    raise ValueError(f"variable {v} out of range")
                k |= 1 << v
            anf ^= 1 << k
        return BooleanFunction.from_anf_mask(n, anf)

    @staticmethod
    def from_anf_string(text: str, n: int | None = None) -> "BooleanFunction":
        monos = parse_anf(text)
        top = max((max(m) for m in monos if m), default=-1)
        if n is None:
            n = top + 1
        if top >= n:
            raise ValueError(f"monomial variable {top} exceeds n={n}")
        return BooleanFunction.from_monomials(n, monos)

    @staticmethod
    def from_hex(n: int, text: str) -> "BooleanFunction":
        size = 1 << n
        value = int(text, 16)
        table = 0
        for i in range(size):
            table |= ((value >> (size - 1 - i)) & 1) << i
        return BooleanFunction(n, table)

    # -- views ----------------------------------------------------------------

    @cached_property
    def anf(self) -> int:
        return _anft_mask(self.table, self.n)

    def value(self, x: int) -> int:
        return (self.table >> x) & 1

    def monomials(self) -> list[tuple[int, ...]]:
        return [tuple(bits(k)) for k in bits(self.anf)]

    def degree(self) -> int:
        return max((k.bit_count() for k in bits(self.anf)), default=0)

    def to_anf_string(self) -> str:
        return format_anf(self.monomials())

    def to_hex(self) -> str:
        size = 1 << self.n
        value = 0
        for i in range(size):
            value = (value << 1) | ((self.table >> i) & 1)
        return format(value, "0{}x".format(max(1, (size + 3) // 4)))

    def chi(self) -> np.ndarray:
        """Bipolar truth table (-1)^f as an int8 vector."""
        size = 1 << self.n
        out = np.ones(size, dtype=np.int8)
        for i in range(size):
            if (self.table >> i) & 1:
                out[i] = -1
        return out

    def strip_affine(self) -> "BooleanFunction":
        """Drop all linear and constant ANF terms."""
        keep = 0
        for k in bits(self.anf):
            if k.bit_count() >= 2:
                keep |= 1 << k
        return BooleanFunction.from_anf_mask(self.n, keep)


# -- ANF text format ----------------------------------------------------------


def parse_anf(text: str) -> list[tuple[int, ...]]:
    """Parse the abbreviated ANF syntax: comma-separated monomials, one digit
    per variable index, parenthesized multi-digit indices, e.g.
    '012,03,04,13,15,24,25' or '(10)1'."""
    text = text.strip()
    if not text:
        return []
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError("empty monomial in ANF string")
        mono = []
        i = 0
        while i < len(token):
            if token[i] == "(":
                j = token.index(")", i)
                mono.append(int(token[i + 1 : j]))
                i = j + 1
            elif token[i].isdigit():
                mono.append(int(token[i]))
                i += 1
            else:
                raise ValueError(f"bad character {token[i]!r} in ANF string")
        out.append(tuple(sorted(set(mono))))
    return out


def format_anf(monomials) -> str:
    def fmt(mono):
        return "".join(str(v) if v < 10 else f"({v})" for v in sorted(mono))

    monos = sorted(monomials, key=lambda m: (-len(m), m))
    return ",".join(fmt(m) for m in monos) if monos else "0"


# -- generalised (Z_m valued) functions ----------------------------------------


@dataclass(frozen=True)
class GeneralizedFunction:
    """Function from Z_2^n to Z_m as a table of 2^n residues."""

    n: int
    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.n:
            raise ValueError("table length must be 2^n")
        if any(not 0 <= v < self.m for v in self.table):
            raise ValueError("table values must lie in 0..m-1")


def anft(f: BooleanFunction) -> int:
    """ANF mask of a Boolean function (self-inverse transform)."""
    return f.anf


def anft_m(values, m: int, n: int, inverse: bool = False) -> list[int]:
    """Generalised ANF transform mod m (even m): truth table -> ANF uses the
    factor [[1,0],[m-1,1]], ANF -> truth table uses [[1,0],[1,1]]."""
    if m % 2:
        raise ValueError("modulus must be even")
    v = list(values)
    size = 1 << n
    if len(v) != size:
        raise ValueError("value vector must have length 2^n")
    lower = 1 if inverse else m - 1
    for i in range(n):
        step = 1 << i
        for base in range(0, size, 2 * step):
            for j in range(base, base + step):
                v[j + step] = (lower * v[j] + v[j + step]) % m
    return v


# -- Walsh spectra --------------------------------------------------------------


def walsh_ints(f: BooleanFunction) -> np.ndarray:
    """Integer Walsh spectrum 2^{n/2} * \\hat{chi}: entry b is
    sum_x (-1)^{f(x) + b.x}."""
    v = f.chi().astype(np.int64)
    size = 1 << f.n
    step = 1
    while step < size:
        v = v.reshape(-1, 2, step)
        a = v[:, 0, :].copy()
        b = v[:, 1, :].copy()
        v[:, 0, :] = a + b
        v[:, 1, :] = a - b
        v = v.reshape(size)
        step *= 2
    return v


def wht(values) -> np.ndarray:
    """Walsh-Hadamard transform normalized by 2^{-n/2}."""
    v = np.asarray(values, dtype=np.float64).copy()
    size = len(v)
    n = size.bit_length() - 1
    if 1 << n != size:
        raise ValueError("length must be a power of 2")
    step = 1
    while step < size:
        v = v.reshape(-1, 2, step)
        a = v[:, 0, :].copy()
        b = v[:, 1, :].copy()
        v[:, 0, :] = a + b
        v[:, 1, :] = a - b
        v = v.reshape(size)
        step *= 2
    return v / (2 ** (n / 2))


def walsh_spectrum(f: BooleanFunction) -> np.ndarray:
    """Normalized Walsh spectrum of the bipolar truth table."""
    return walsh_ints(f).astype(np.float64) / (2 ** (f.n / 2))


# -- autocorrelations ------------------------------------------------------------


@dataclass(frozen=True)
class AutocorrelationQuery:
    """Mask triple (a, mu, k) plus the kind of autocorrelation.

    periodic:        r(a),          mu = k = 0
    fixed_periodic:  r(a, mu, k),   k covered by mu, a covered by ~mu
    aperiodic:       s(a, k),       k covered by a (mu = a)
    fixed_aperiodic: s(a, mu, k),   a and k covered by mu
    """

    kind: str
    a: int
    mu: int = 0
    k: int = 0


def _covered(u: int, v: int) -> bool:
    return u & ~v == 0


def autocorrelation(f: BooleanFunction, q: AutocorrelationQuery) -> int:
    """Signed coset sum sum_x (-1)^{f(x) + f(x+a)} over the x range the
    query kind prescribes; exact integer."""
    n = f.n
    a, mu, k = q.a, q.mu, q.k
    if q.kind == "periodic":
        if mu or k:
            raise ValueError("periodic autocorrelation takes masks mu = k = 0")
        free = (1 << n) - 1
        base = 0
    elif q.kind == "fixed_periodic":
        if not _covered(k, mu) or not _covered(a, ((1 << n) - 1) ^ mu):
            raise ValueError("need k covered by mu and a covered by ~mu")
        free = ((1 << n) - 1) ^ mu
        base = k
    elif q.kind == "aperiodic":
        if not _covered(k, a):
            raise ValueError("need k covered by a")
        free = ((1 << n) - 1) ^ a
        base = k
    elif q.kind == "fixed_aperiodic":
        if not _covered(a, mu) or not _covered(k, mu):
            raise ValueError("need a and k covered by mu")
        free = ((1 << n) - 1) ^ mu
        base = k
    else:
        raise ValueError(f"unknown autocorrelation kind {q.kind!r}")
    total = 0
    # iterate subsets of the free mask
    sub = free
    while True:
        x = base ^ (free ^ sub)  # enumerate x in base + subsets of free
        total += 1 if f.value(x) == f.value(x ^ a) else -1
        if sub == 0:
            break
        sub = (sub - 1) & free
    return total


def periodic_autocorrelation(f: BooleanFunction, a: int) -> int:
    return autocorrelation(f, AutocorrelationQuery("periodic", a))


# -- cryptographic properties ------------------------------------------------------


@dataclass(frozen=True)
class CryptoProperties:
    balanced: bool
    bent: bool
    resilience: int  # -1 when not balanced
    correlation_immunity: int
    nonlinearity: int


def crypto_properties(f: BooleanFunction) -> CryptoProperties:
    """Balancedness, bentness, resilience / correlation-immunity orders and
    nonlinearity, all read off the Walsh spectrum."""
    w = walsh_ints(f)
    n = f.n
    balanced = w[0] == 0
    bent = bool(n % 2 == 0 and np.all(np.abs(w) == 2 ** (n // 2)))
    ci = 0
    for m in range(1, n + 1):
        if all(w[b] == 0 for b in range(1, 1 << n) if bin(b).count("1") == m):
            ci = m
        else:
            break
    resilience = ci if balanced else -1
    nonlinearity = (1 << (n - 1)) - int(np.max(np.abs(w))) // 2
    return CryptoProperties(balanced, bent, resilience, ci, nonlinearity)


def is_resilient(f: BooleanFunction, m: int) -> bool:
    w = walsh_ints(f)
    return all(
        w[b] == 0 for b in range(1 << f.n) if bin(b).count("1") <= m
    )


def derivative(f: BooleanFunction, a: int) -> BooleanFunction:
    """f(x) + f(x+a)."""
    size = 1 << f.n
    table = 0
    for x in range(size):
        table |= (f.value(x) ^ f.value(x ^ a)) << x
    return BooleanFunction(f.n, table)


# -- propagation criteria -----------------------------------------------------------


def _weight_masks(n: int, low: int, high: int):
    for m in range(1 << n):
        if low <= m.bit_count() <= high:
            yield m


def pc_check(f: BooleanFunction, l: int, m: int) -> bool:
    """Propagation criterion of degree l and order m: every fixed-periodic
    autocorrelation r(a, mu, k) with 1 <= w(a) <= l, w(mu) <= m vanishes
    (a outside the fixed set)."""
    n = f.n
    if l < 1 or m < 0 or l + m > n:
        raise ValueError(f"invalid (l, m) = ({l}, {m}) for n = {n}")
    full = (1 << n) - 1
    for mu in _weight_masks(n, 0, m):
        rest = full ^ mu
        for a in _weight_masks(n, 1, l):
            if a & ~rest:
                continue
            k = mu
            while True:
                q = AutocorrelationQuery("fixed_periodic", a, mu, k)
                if autocorrelation(f, q) != 0:
                    return False
                if k == 0:
                    break
                k = (k - 1) & mu
    return True


def epc_check(f: BooleanFunction, l: int, m: int) -> bool:
    """Extended propagation criterion: f(x) + f(x+a) is m-resilient for every
    a with 1 <= w(a) <= l (fixed and shifted bits may overlap)."""
    if l < 1 or m < 0 or l > f.n or m > f.n:
        raise ValueError(f"invalid (l, m) = ({l}, {m})")
    return all(
        is_resilient(derivative(f, a), m) for a in _weight_masks(f.n, 1, l)
    )


def apc_check(f: BooleanFunction, l: int, m: int) -> bool:
    """Aperiodic propagation criterion of degree l and order m: every
    fixed-aperiodic autocorrelation s(a, mu, k) with 1 <= w(a) <= l and
    w(theta) <= m, theta = mu + a disjoint from a, vanishes."""
    n = f.n
    if l < 1 or m < 0 or l + m > n:
        raise ValueError(f"invalid (l, m) = ({l}, {m}) for n = {n}")
    for a in _weight_masks(n, 1, l):
        rest = ((1 << n) - 1) ^ a
        # theta: fixed-but-not-shifted variables, disjoint from a
        thetas = [t for t in _weight_masks(n, 0, m) if t & a == 0]
        for theta in thetas:
            mu = theta | a
            k = mu
            while True:
                q = AutocorrelationQuery("fixed_aperiodic", a, mu, k)
                if autocorrelation(f, q) != 0:
                    return False
                if k == 0:
                    break
                k = (k - 1) & mu
    return True


def apc_distance(f: BooleanFunction) -> int:
    """Smallest nonzero w(a, b) = popcount(a | b) over Pauli errors whose
    image f(x+a) + b.x is not orthogonal to f; equals the distance of the
    quantum code the function represents.

    Errors are swept in increasing weight of a; for each a all phase masks b
    come from one Walsh transform of the derivative's bipolar table.
    """
    n = f.n
    size = 1 << n
    chi = f.chi().astype(np.int64)
    best = n + 1
    order = sorted(range(size), key=lambda a: bin(a).count("1"))
    for a in order:
        wa = bin(a).count("1")
        if wa >= best:
            break
        deriv = chi * chi[np.arange(size) ^ a]
        w = deriv
        step = 1
        while step < size:
            w = w.reshape(-1, 2, step)
            s0 = w[:, 0, :].copy()
            s1 = w[:, 1, :].copy()
            w[:, 0, :] = s0 + s1
            w[:, 1, :] = s0 - s1
            w = w.reshape(size)
            step *= 2
        for b in range(size):
            if w[b] != 0:
                wab = bin(a | b).count("1")
                if 0 < wab < best:
                    best = wab
    return best


# -- hypergraph / graph views and Pauli actions --------------------------------------


def function_hypergraph(f: BooleanFunction) -> Hypergraph:
    """Hypergraph whose edges are the monomials of degree >= 2."""
    edges = [m for m in f.monomials() if len(m) >= 2]
    return Hypergraph.from_edges(f.n, edges)


def function_graph(f: BooleanFunction) -> Graph:
    """Graph of a quadratic function with no affine part."""
    adj = [0] * f.n
    for mono in f.monomials():
        if len(mono) != 2:
            raise ValueError("function is not quadratic without affine terms")
        i, j = mono
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(f.n, tuple(adj))


def graph_function(g: Graph) -> BooleanFunction:
    """Quadratic function with one monomial per edge."""
    return BooleanFunction.from_monomials(g.n, g.edges())


def hypergraph_function(h: Hypergraph) -> BooleanFunction:
    return BooleanFunction.from_monomials(h.n, h.sorted_edges())


def apply_pauli_error(f: BooleanFunction, a: int, b: int) -> BooleanFunction:
    """Error image f(x + a) + b.x (the constant phase b.a is dropped)."""
    size = 1 << f.n
    table = 0
    for x in range(size):
        v = f.value(x ^ a) ^ ((b & x).bit_count() & 1)
        table |= v << x
    return BooleanFunction(f.n, table)


def lc_on_function(f: BooleanFunction, var: int) -> BooleanFunction:
    """Local complementation on a variable of a quadratic function: add all
    pairs of its graph neighbours."""
    g = function_graph(f.strip_affine())
    nv = g.adj[var]
    addition = []
    nb = list(bits(nv))
    for i, u in enumerate(nb):
        for v in nb[i + 1 :]:
            addition.append((u, v))
    extra = BooleanFunction.from_monomials(f.n, addition)
    return BooleanFunction.from_anf_mask(f.n, f.anf ^ extra.anf)
