"""Tensor-decomposable transform machinery: butterflies, Gray-code
multispectra, {I,H,N}^n orbits, PAR, Clifford merit factor, and the PAR
constructions.

Two backends coexist.  Generic transform sets run in complex floating
point.  The {I,H,N} family runs on an exact integer lattice: every entry
of an {I,H,N}^n transform of a bipolar vector lies in Z[w] / sqrt(2)^t
with w = exp(i pi/4), so vectors are stored as integer component arrays
(1, w, w^2, w^3) plus a global sqrt(2) exponent.  Flatness tests and
Boolean-flat recovery are therefore exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .boolfn import BooleanFunction, anft_m
from .canon import Hypergraph, hypergraph_canonical, hypergraph_key
from .graphs import Graph, bits

SQRT2 = math.sqrt(2.0)

# -- transform sets -----------------------------------------------------------

_I = np.eye(2, dtype=np.complex128)
_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / SQRT2
_N = np.array([[1, 1j], [1, -1j]], dtype=np.complex128) / SQRT2
_SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_R4 = np.array([[1, 0], [0, 1j]], dtype=np.complex128)
_TX = np.array([[-1, 1j], [1j, -1]], dtype=np.complex128) / SQRT2
_TZ = np.array(
    [[np.exp(1j * np.pi / 4), 0], [0, np.exp(-1j * np.pi * 3 / 4)]],
    dtype=np.complex128,
)

_NAMED = {"I": _I, "H": _H, "N": _N, "SX": _SX, "R4": _R4, "TX": _TX, "TZ": _TZ}


@dataclass(frozen=True)
class TransformSet:
    """Named list of 2x2 unitary matrices defining a k^n transform family."""

    names: tuple[str, ...]
    matrices: tuple

    def __post_init__(self):
        for name, m in zip(self.names, self.matrices):
            mat = np.asarray(m, dtype=np.complex128)
            if mat.shape != (2, 2) or not np.allclose(
                mat @ mat.conj().T, np.eye(2), atol=1e-12
            ):
                raise ValueError(f"matrix {name} is not unitary within 1e-12")

    @staticmethod
    def of(*names: str) -> "TransformSet":
        return TransformSet(tuple(names), tuple(_NAMED[n] for n in names))

    @staticmethod
    def custom(entries: dict) -> "TransformSet":
        names = tuple(entries)
        return TransformSet(names, tuple(np.asarray(entries[n]) for n in names))

    def __len__(self) -> int:
        return len(self.names)


IHN = TransformSet.of("I", "H", "N")
IH = TransformSet.of("I", "H")
HN = TransformSet.of("H", "N")


@dataclass(frozen=True)
class SpectralVector:
    """Length-2^n complex vector (probability-distribution convention:
    a Boolean function f maps to 2^{-n/2} (-1)^f)."""

    n: int
    values: np.ndarray

    @staticmethod
    def from_function(f: BooleanFunction) -> "SpectralVector":
        v = f.chi().astype(np.complex128) / (2 ** (f.n / 2))
        return SpectralVector(f.n, v)

    @staticmethod
    def from_values(values) -> "SpectralVector":
        v = np.asarray(values, dtype=np.complex128)
        n = len(v).bit_length() - 1
        if 1 << n != len(v):
            raise ValueError("length must be a power of 2")
        return SpectralVector(n, v)


# -- butterfly ---------------------------------------------------------------


def _apply_axis(v: np.ndarray, mat: np.ndarray, axis: int, n: int) -> np.ndarray:
    """Apply a 2x2 matrix along bit ``axis`` of the index."""
    shape = (1 << (n - axis - 1), 2, 1 << axis)
    w = v.reshape(shape)
    a = mat[0, 0] * w[:, 0, :] + mat[0, 1] * w[:, 1, :]
    b = mat[1, 0] * w[:, 0, :] + mat[1, 1] * w[:, 1, :]
    out = np.empty_like(w)
    out[:, 0, :] = a
    out[:, 1, :] = b
    return out.reshape(v.shape)


def butterfly(v: SpectralVector | Sequence, factors: Sequence) -> SpectralVector:
    """Transform by the tensor product of n 2x2 matrices in O(N log N);
    factors[i] acts on variable/bit i."""
    sv = v if isinstance(v, SpectralVector) else SpectralVector.from_values(v)
    if len(factors) != sv.n:
        raise ValueError(f"need {sv.n} factor matrices, got {len(factors)}")
    out = sv.values.copy()
    for i, f in enumerate(factors):
        out = _apply_axis(out, np.asarray(f, dtype=np.complex128), i, sv.n)
    return SpectralVector(sv.n, out)


# -- Gray code sequences -------------------------------------------------------


def gray_sequence(k: int, r: int) -> list[tuple[int, ...]]:
    """k-ary Gray sequence of order r: all k^r words, consecutive words
    differing in exactly one position (recursive prefix/reverse build)."""
    if k < 1 or r < 1:
        raise ValueError("alphabet size and length must be positive")
    if k**r > 1 << 48:
        raise ValueError("Gray sequence would exceed 2^48 words")
    seq: list[tuple[int, ...]] = [(c,) for c in range(k)]
    for _ in range(r - 1):
        nxt = []
        for c in range(k):
            block = seq if c % 2 == 0 else list(reversed(seq))
            nxt.extend((c,) + s for s in block)
        seq = nxt
    return seq


def gray_steps(k: int, r: int) -> Iterator[tuple[tuple[int, ...], int, int, int]]:
    """Yield (word, changed_pos, old_symbol, new_symbol); the first word is
    all zeros with (-1, -1, -1)."""
    seq = gray_sequence(k, r)
    prev = seq[0]
    yield prev, -1, -1, -1
    for word in seq[1:]:
        pos = next(i for i in range(r) if word[i] != prev[i])
        yield word, pos, prev[pos], word[pos]
        prev = word


# -- generic (floating point) multispectrum -------------------------------------


def multispectrum(
    s: SpectralVector | BooleanFunction, tset: TransformSet
) -> Iterator[tuple[tuple[int, ...], SpectralVector]]:
    """All |T|^n transforms of s in Gray order; each step applies the single
    transition matrix next . prev^{-1} on the changed axis.  Single-consumer
    stream; vectors are fresh copies."""
    sv = s if isinstance(s, SpectralVector) else SpectralVector.from_function(s)
    k = len(tset)
    mats = [np.asarray(m, dtype=np.complex128) for m in tset.matrices]
    trans = {}
    for a in range(k):
        for b in range(k):
            if a != b:
                trans[(a, b)] = mats[b] @ np.linalg.inv(mats[a])
    cur = butterfly(sv, [mats[0]] * sv.n).values
    for word, pos, old, new in gray_steps(k, sv.n):
        if pos >= 0:
            cur = _apply_axis(cur, trans[(old, new)], pos, sv.n)
        yield word, SpectralVector(sv.n, cur.copy())


# -- exact Z[w] lattice engine for the {I,H,N} alphabet --------------------------

# component convention: value = c0 + c1 w + c2 w^2 + c3 w^3, w^4 = -1
_ZW_H = (
    ((1, 0, 0, 0), (1, 0, 0, 0)),
    ((1, 0, 0, 0), (-1, 0, 0, 0)),
)  # sqrt2 * H
_ZW_N = (
    ((1, 0, 0, 0), (0, 0, 1, 0)),
    ((1, 0, 0, 0), (0, 0, -1, 0)),
)  # sqrt2 * N
_ZW_NH = (
    ((0, 1, 0, 0), (0, 0, 0, -1)),
    ((0, 0, 0, -1), (0, 1, 0, 0)),
)  # sqrt2 * N H^{-1}
_ZW_HN = (
    ((0, 0, 0, -1), (0, 1, 0, 0)),
    ((0, 1, 0, 0), (0, 0, 0, -1)),
)  # sqrt2 * H N^{-1}

# transition table for adjacent Gray steps over the alphabet (I, H, N)
_IHN_STEP = {
    (0, 1): _ZW_H,
    (1, 0): _ZW_H,
    (1, 2): _ZW_NH,
    (2, 1): _ZW_HN,
}


class LatticeVector:
    """2^n complex entries as integer (1, w, w^2, w^3) components over a
    global 1/sqrt(2)^t scale."""

    __slots__ = ("n", "comps", "t")

    def __init__(self, n: int, comps: np.ndarray, t: int):
        self.n = n
        self.comps = comps  # shape (2^n, 4), int64
        self.t = t

    @staticmethod
    def from_function(f: BooleanFunction) -> "LatticeVector":
        size = 1 << f.n
        comps = np.zeros((size, 4), dtype=np.int64)
        comps[:, 0] = f.chi()
        return LatticeVector(f.n, comps, 0)

    def copy(self) -> "LatticeVector":
        return LatticeVector(self.n, self.comps.copy(), self.t)

    def complex_values(self) -> np.ndarray:
        w = np.exp(1j * np.pi / 4)
        scale = SQRT2 ** (-self.t)
        powers = np.array([1, w, w * w, w**3])
        return (self.comps @ powers) * scale

    # -- arithmetic ------------------------------------------------------------

    def _normalize(self) -> None:
        while self.t >= 2 and not np.any(self.comps & 1):
            self.comps >>= 1
            self.t -= 2

    def mul_sqrt2(self) -> None:
        """Multiply all entries by sqrt(2) = w - w^3, bumping t to keep the
        represented value unchanged."""
        c = self.comps
        out = np.empty_like(c)
        # (c0 + c1 w + c2 w^2 + c3 w^3)(w - w^3)
        out[:, 0] = c[:, 1] - c[:, 3]
        out[:, 1] = c[:, 0] + c[:, 2]
        out[:, 2] = c[:, 1] + c[:, 3]
        out[:, 3] = c[:, 2] - c[:, 0]
        self.comps = out
        self.t += 1

    def apply_step(self, mat, axis: int) -> None:
        """Apply a sqrt(2)-scaled Z[w] 2x2 matrix on one axis (t += 1)."""
        size = 1 << self.n
        c = self.comps.reshape(1 << (self.n - axis - 1), 2, 1 << axis, 4)
        x0 = c[:, 0, :, :]
        x1 = c[:, 1, :, :]
        new0 = _zw_combine(mat[0][0], x0) + _zw_combine(mat[0][1], x1)
        new1 = _zw_combine(mat[1][0], x0) + _zw_combine(mat[1][1], x1)
        out = np.empty_like(c)
        out[:, 0, :, :] = new0
        out[:, 1, :, :] = new1
        self.comps = out.reshape(size, 4)
        self.t += 1
        self._normalize()

    # -- measurements -----------------------------------------------------------

    def sq_magnitudes(self) -> tuple[np.ndarray, np.ndarray]:
        """|entry|^2 = A + B sqrt(2) per entry, before the global scale."""
        c = self.comps
        a = (c * c).sum(axis=1)
        b = c[:, 0] * c[:, 1] + c[:, 1] * c[:, 2] + c[:, 2] * c[:, 3] - c[:, 0] * c[:, 3]
        return a, b

    def is_flat(self) -> bool:
        a, b = self.sq_magnitudes()
        return bool(np.all(a == a[0]) and np.all(b == b[0]))

    def max_sq_magnitude(self) -> float:
        """max |value|^2 over entries, as a float (scale applied)."""
        a, b = self.sq_magnitudes()
        vals = a + b * SQRT2
        return float(np.max(vals)) / (2.0 ** self.t)

    def sum_fourth_powers(self) -> float:
        a, b = self.sq_magnitudes()
        vals = a.astype(np.float64) + b.astype(np.float64) * SQRT2
        return float(np.sum(vals * vals)) / (2.0 ** (2 * self.t))

    def phase_table(self) -> np.ndarray | None:
        """If every entry is (common magnitude) * w^g, return the Z8 table g;
        otherwise None.  Entries of the form m*sqrt(2)*w^g are handled by one
        extra sqrt(2) multiplication."""
        for _ in range(2):
            nz = self.comps != 0
            counts = nz.sum(axis=1)
            if np.any(counts == 0):
                return None
            if np.all(counts == 1):
                idx = np.argmax(nz, axis=1)
                vals = self.comps[np.arange(len(idx)), idx]
                if np.all(np.abs(vals) == abs(vals[0])):
                    return (idx + 4 * (vals < 0)) % 8
                return None
            self.mul_sqrt2()
        return None


def _zw_combine(coef, x: np.ndarray) -> np.ndarray:
    """Multiply component array x (..., 4) by the Z[w] scalar coef."""
    out = np.zeros_like(x)
    for j in range(4):
        cj = coef[j]
        if cj == 0:
            continue
        for k in range(4):
            dest = (j + k) % 4
            sign = -1 if j + k >= 4 else 1
            out[..., dest] += sign * cj * x[..., k]
    return out


def ihn_spectra(f: BooleanFunction) -> Iterator[tuple[tuple[int, ...], LatticeVector]]:
    """Exact {I,H,N}^n multispectrum in Gray order (working vector is shared;
    copy if retained)."""
    state = LatticeVector.from_function(f)
    for word, pos, old, new in gray_steps(3, f.n):
        if pos >= 0:
            state.apply_step(_IHN_STEP[(old, new)], pos)
        yield word, state


def _subset_spectra(f: BooleanFunction, alphabet: tuple[int, ...]):
    """Exact multispectrum over a sub-alphabet of (I, H, N) given by indices
    into that alphabet (e.g. (0, 1) for {I,H}, (1, 2) for {H,N})."""
    state = LatticeVector.from_function(f)
    start = alphabet[0]
    if start == 1:
        for axis in range(f.n):
            state.apply_step(_ZW_H, axis)
    elif start == 2:
        for axis in range(f.n):
            state.apply_step(_ZW_N, axis)
    k = len(alphabet)
    for word, pos, old, new in gray_steps(k, f.n):
        if pos >= 0:
            state.apply_step(_IHN_STEP[(alphabet[old], alphabet[new])], pos)
        yield tuple(alphabet[c] for c in word), state


def _alphabet_of(tset: TransformSet) -> tuple[int, ...] | None:
    table = {"I": 0, "H": 1, "N": 2}
    if all(name in table for name in tset.names):
        alpha = tuple(table[name] for name in tset.names)
        if all(abs(alpha[i + 1] - alpha[i]) == 1 for i in range(len(alpha) - 1)):
            return alpha
    return None


# -- PAR ------------------------------------------------------------------------


def par(s: SpectralVector | BooleanFunction, tset: TransformSet) -> float:
    """Peak-to-average power ratio 2^n max |S_k|^2 over the multispectrum
    (scale-invariant in the input normalization)."""
    if isinstance(s, BooleanFunction):
        alpha = _alphabet_of(tset)
        if alpha is not None:
            peak = 0.0
            for _, state in _subset_spectra(s, alpha):
                peak = max(peak, state.max_sq_magnitude())
            return peak  # chi is unnormalized: 2^n max|S|^2 / ||s||^2 = max
        sv = SpectralVector.from_function(s)
    else:
        sv = s
    norm = float(np.sum(np.abs(sv.values) ** 2))
    peak = 0.0
    for _, spec in multispectrum(sv, tset):
        peak = max(peak, float(np.max(np.abs(spec.values) ** 2)))
    return (1 << sv.n) * peak / norm


def par_ihn(s) -> float:
    return par(s, IHN)


def par_ih(s) -> float:
    return par(s, IH)


def par_hn(s) -> float:
    return par(s, HN)


# -- Boolean-flat recovery ---------------------------------------------------------


def _recover_from_phases(n: int, phases) -> tuple[BooleanFunction, tuple[int, tuple[int, ...]]] | None:
    """Z8 phase table -> (Boolean part, affine remainder) or None.

    The Z8 ANF splits into monomials with coefficient divisible by 4 (the
    Boolean part f') and a remainder h; the vector is Boolean flat iff h is
    affine with even linear coefficients.
    """
    coeffs = anft_m([int(p) for p in phases], 8, n)
    fmask = 0
    const = 0
    linear = [0] * n
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if c % 4 == 0:
            fmask |= (c // 4 % 2) << k
            continue
        if k == 0:
            const = c
            continue
        if k.bit_count() == 1:
            if c % 2:
                return None
            linear[k.bit_length() - 1] = c
            continue
        return None
    fprime = BooleanFunction.from_anf_mask(n, fmask)
    return fprime, (const, tuple(linear))


def recover_boolean_flat(
    s: SpectralVector | LatticeVector,
) -> tuple[BooleanFunction, tuple[int, tuple[int, ...]]] | None:
    """Recover (f', affine part) from a flat vector with eighth-root phases,
    or None when the vector is not Boolean flat.

    Complex input is snapped to the lattice: each entry must be a common
    magnitude times an eighth root of unity (within 1e-9).
    """
    if isinstance(s, LatticeVector):
        lat = s.copy()
    else:
        vals = s.values
        mags = np.abs(vals)
        if mags.min() < 1e-12 or (mags.max() - mags.min()) > 1e-9 * mags.max():
            return None
        ang = np.angle(vals / mags)
        steps = ang / (np.pi / 4)
        snapped = np.rint(steps)
        if np.max(np.abs(steps - snapped)) > 1e-6:
            return None
        comps = np.zeros((len(vals), 4), dtype=np.int64)
        g = snapped.astype(np.int64) % 8
        for i, ph in enumerate(g):
            comps[i, ph % 4] = -1 if ph >= 4 else 1
        lat = LatticeVector(s.n, comps, 0)
    if not lat.is_flat():
        return None
    phases = lat.phase_table()
    if phases is None:
        return None
    return _recover_from_phases(lat.n, phases)


# -- {I,H,N}^n and {I,sx}^n{I,H,N}^n orbits ------------------------------------------


def _canonical_function(f: BooleanFunction) -> tuple[bytes, BooleanFunction]:
    """Canonise the monomial hypergraph; returns (key, relabeled function)."""
    edges = [m for m in f.monomials() if len(m) >= 2]
    h = Hypergraph.from_edges(f.n, edges)
    ch, _ = hypergraph_canonical(h)
    rep = BooleanFunction.from_monomials(f.n, ch.sorted_edges())
    return hypergraph_key(h), rep


def _ihn_orbit_map(f: BooleanFunction) -> dict[bytes, BooleanFunction]:
    found: dict[bytes, BooleanFunction] = {}
    for _, state in ihn_spectra(f):
        if not state.is_flat():
            continue
        phases = state.copy().phase_table()
        if phases is None:
            continue
        rec = _recover_from_phases(f.n, phases)
        if rec is None:
            continue
        key, rep = _canonical_function(rec[0].strip_affine())
        found.setdefault(key, rep)
    return found


def _close_under_bit_flips(n: int, found: dict[bytes, BooleanFunction]) -> None:
    from .boolfn import apply_pauli_error

    queue = list(found.values())
    while queue:
        g = queue.pop()
        for a in range(1, 1 << n):
            img = apply_pauli_error(g, a, 0).strip_affine()
            key, rep = _canonical_function(img)
            if key not in found:
                found[key] = rep
                queue.append(rep)


def ihn_orbit(f: BooleanFunction) -> list[BooleanFunction]:
    """All distinct Boolean functions recovered from Boolean-flat {I,H,N}^n
    transforms of f, affine parts stripped, up to variable permutation."""
    found = _ihn_orbit_map(f)
    return [found[k] for k in sorted(found)]


def _ix_orbit_map(f: BooleanFunction) -> dict[bytes, BooleanFunction]:
    start_key, start = _canonical_function(f.strip_affine())
    found = {start_key: start}
    _close_under_bit_flips(f.n, found)
    return found


def ix_orbit(f: BooleanFunction) -> list[BooleanFunction]:
    """The {I,sx}^n orbit: closure of f under bit flips, affine stripping and
    variable permutation."""
    found = _ix_orbit_map(f)
    return [found[k] for k in sorted(found)]


def _ix_ihn_orbit_map(f: BooleanFunction) -> dict[bytes, BooleanFunction]:
    found = _ihn_orbit_map(f)
    _close_under_bit_flips(f.n, found)
    return found


def ix_ihn_orbit(f: BooleanFunction) -> list[BooleanFunction]:
    """The {I,sx}^n{I,H,N}^n orbit: recover all Boolean-flat {I,H,N}^n
    transforms, then close the result under bit flips."""
    found = _ix_ihn_orbit_map(f)
    return [found[k] for k in sorted(found)]


# -- function-orbit census ------------------------------------------------------------


def _connected_function(f: BooleanFunction) -> bool:
    comps = [1 << v for v in range(f.n)]
    for mono in f.monomials():
        mask = 0
        for v in mono:
            mask |= 1 << v
        merged = mask
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        comps = rest + [merged]
    return len(comps) == 1


def all_connected_functions(n: int, max_degree: int | None = None) -> Iterator[BooleanFunction]:
    """All Boolean functions of n variables with monomials of degree >= 2
    only, connected monomial hypergraph, one per function (not deduplicated
    by isomorphism)."""
    monos = [
        k
        for k in range(1 << n)
        if k.bit_count() >= 2 and (max_degree is None or k.bit_count() <= max_degree)
    ]
    for pick in range(1, 1 << len(monos)):
        anf = 0
        for i in bits(pick):
            anf |= 1 << monos[i]
        f = BooleanFunction.from_anf_mask(n, anf)
        if _connected_function(f):
            yield f


def function_orbit_census(
    n: int,
    symmetry: str = "ix",
    max_degree: int | None = None,
    seeds: Iterable[BooleanFunction] | None = None,
) -> list[BooleanFunction]:
    """One representative per orbit of connected Boolean functions under the
    chosen symmetry ('ix' for {I,sx}^n, 'ix_ihn' for {I,sx}^n{I,H,N}^n)."""
    orbit_of = {"ix": _ix_orbit_map, "ix_ihn": _ix_ihn_orbit_map}[symmetry]
    if seeds is None:
        seeds = all_connected_functions(n, max_degree)
    seen: set[bytes] = set()
    reps: list[BooleanFunction] = []
    for f in seeds:
        key, _ = _canonical_function(f.strip_affine())
        if key in seen:
            continue
        orbit = orbit_of(f)
        if not seen.isdisjoint(orbit):
            seen.update(orbit)
            continue
        seen.update(orbit)
        reps.append(orbit[min(orbit)])
    return reps


def extend_function(f: BooleanFunction) -> Iterator[BooleanFunction]:
    """All extensions by one variable: add every nonempty set of new
    monomials that contain the new variable (degree >= 2)."""
    n = f.n
    newvar = 1 << n
    monos = [newvar | s for s in range(1, 1 << n)]
    base = f.anf
    for pick in range(1, 1 << len(monos)):
        anf = base
        for i in bits(pick):
            anf |= 1 << monos[i]
        yield BooleanFunction.from_anf_mask(n + 1, anf)


# -- CMF, flat spectra, Schmidt bounds --------------------------------------------------


def cmf(s: SpectralVector | BooleanFunction) -> float:
    """Clifford merit factor 6^n / (a - 6^n), a the sum of fourth powers of
    all 6^n = 3^n * 2^n spectral magnitudes over {I,H,N}^n (bipolar input
    normalization).  Infinite when a = 6^n."""
    if isinstance(s, BooleanFunction):
        n = s.n
        a = sum(state.sum_fourth_powers() for _, state in ihn_spectra(s))
    else:
        n = s.n
        scale = (1 << n) / float(np.sum(np.abs(s.values) ** 2))
        a = 0.0
        for _, spec in multispectrum(s, IHN):
            a += float(np.sum(np.abs(spec.values) ** 4)) * scale * scale
    denom = a - 6.0**n
    if abs(denom) < 1e-6:
        return math.inf
    return 6.0**n / denom


def count_flat_spectra(f: BooleanFunction) -> int:
    """Number of the 3^n {I,H,N}^n transform words with a flat spectrum.

    (Counting the sign/phase variants of each word separately, as the 6^n
    phrasing does, multiplies this by 2^n.)
    """
    return sum(1 for _, state in ihn_spectra(f) if state.is_flat())


def schmidt_bounds(f: BooleanFunction) -> tuple[float, float]:
    """(lower, upper) bounds on the Schmidt measure of the state of f.

    lower = n - log2(PAR_IHN); the upper bound n - lambda = min(n - lambda,
    minimum vertex cover) applies to quadratic functions.
    """
    from .boolfn import function_graph
    from .orbits import lambda_of

    n = f.n
    lower = n - math.log2(par_ihn(f))
    g = function_graph(f.strip_affine())
    upper = float(n - lambda_of(g))
    return lower, upper


# -- PAR constructions --------------------------------------------------------------------


def _as_function(n: int, spec) -> BooleanFunction:
    if isinstance(spec, BooleanFunction):
        if spec.n != n:
            return BooleanFunction.from_anf_mask(n, spec.anf)
        return spec
    return BooleanFunction.from_anf_string(str(spec), n)


def _blocks(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    out = []
    start = 0
    for t in sizes:
        out.append(tuple(range(start, start + t)))
        start += t
    return out


def _check_support(f: BooleanFunction, block: tuple[int, ...], where: str) -> None:
    allowed = 0
    for v in block:
        allowed |= 1 << v
    for mono in f.monomials():
        for v in mono:
            if not (allowed >> v) & 1:
                raise ValueError(f"{where}: variable {v} outside its block")


def construct2(
    template: Graph,
    sizes: Sequence[int],
    gamma: dict[tuple[int, int], tuple[Sequence, Sequence]],
    offsets: dict[int, object] | None = None,
) -> BooleanFunction:
    """Generalised-adjacency-matrix construction.

    ``template`` is the block graph; ``sizes[j]`` the width of block j
    (variables are consecutive).  For each template edge (i, j), i < j,
    ``gamma[(i,j)]`` holds two equal-length lists of component functions
    (over block i's and block j's variables, in the abbreviated global-index
    ANF syntax); the edge contributes the component-wise product sum.
    ``offsets[j]`` adds a function on block j's variables.
    """
    if template.n != len(sizes):
        raise ValueError("template order must equal the number of blocks")
    n = sum(sizes)
    blocks = _blocks(sizes)
    edges = set(template.edges())
    if set(gamma) != edges:
        raise ValueError("gamma entries must exactly cover the template edges")
    anf_total = 0
    table_total = 0
    for (i, j), (side_i, side_j) in gamma.items():
        if len(side_i) != len(side_j):
            raise ValueError(f"component count mismatch on edge ({i},{j})")
        for fi_spec, fj_spec in zip(side_i, side_j):
            fi = _as_function(n, fi_spec)
            fj = _as_function(n, fj_spec)
            _check_support(fi, blocks[i], f"gamma[{i},{j}] left")
            _check_support(fj, blocks[j], f"gamma[{i},{j}] right")
            table_total ^= fi.table & fj.table
    for j, g_spec in (offsets or {}).items():
        gj = _as_function(n, g_spec)
        _check_support(gj, blocks[j], f"offset g_{j}")
        table_total ^= gj.table
    return BooleanFunction(n, table_total)


def construct1(
    sizes: Sequence[int],
    thetas: Sequence[Sequence],
    gammas: Sequence[Sequence],
    offsets: dict[int, object] | None = None,
) -> BooleanFunction:
    """Path-template special case: block j couples to block j+1 through the
    component products theta_j . gamma_j; reduces to Maiorana-McFarland for
    two equal blocks with the identity permutation."""
    ln = len(sizes)
    if len(thetas) != ln - 1 or len(gammas) != ln - 1:
        raise ValueError("need one theta/gamma pair per consecutive block pair")
    template = Graph.path(ln)
    gamma = {
        (j, j + 1): (thetas[j], gammas[j]) for j in range(ln - 1)
    }
    return construct2(template, sizes, gamma, offsets)
