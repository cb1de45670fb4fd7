import math

import numpy as np
import pytest

from qgc.boolfn import BooleanFunction, graph_function
from qgc.canon import canonical_key
from qgc.constructions import circulant_graph, circulant_row_from_text
from qgc.graphs import Graph
from qgc.orbits import classify, lc_orbit
from qgc.transforms import (
    IHN,
    LatticeVector,
    SpectralVector,
    TransformSet,
    butterfly,
    cmf,
    construct1,
    construct2,
    count_flat_spectra,
    extend_function,
    function_orbit_census,
    gray_sequence,
    gray_steps,
    ihn_orbit,
    ihn_spectra,
    ix_ihn_orbit,
    ix_orbit,
    multispectrum,
    par,
    par_hn,
    par_ih,
    par_ihn,
    recover_boolean_flat,
    schmidt_bounds,
)

HEXACODE = circulant_graph(circulant_row_from_text("w01110"))
HEXFN = graph_function(HEXACODE)


# -- transform sets ------------------------------------------------------------


def test_transform_set_unitarity_check():
    with pytest.raises(ValueError):
        TransformSet.custom({"bad": np.array([[1, 1], [0, 1]])})
    ts = TransformSet.of("I", "H", "N", "SX", "R4", "TX", "TZ")
    assert len(ts) == 7


# -- butterfly -----------------------------------------------------------------


def _dense(factors):
    out = np.array([[1.0 + 0j]])
    # factor i acts on bit i (the fastest-varying index)
    for f in factors:
        out = np.kron(np.asarray(f, dtype=complex), out)
    return out


def _random_unitary(rng):
    a = rng.random() * 2 * np.pi
    b = rng.random() * 2 * np.pi
    c = rng.random() * 2 * np.pi
    return np.array(
        [
            [np.cos(a), np.sin(a) * np.exp(1j * b)],
            [np.sin(a) * np.exp(1j * c), -np.cos(a) * np.exp(1j * (b + c))],
        ]
    )


def test_butterfly_matches_dense(rng):
    import random

    r = random.Random(991)
    nprng = np.random.default_rng(7)
    for _ in range(40):
        n = r.randint(1, 8)
        factors = [_random_unitary(nprng) for _ in range(n)]
        v = nprng.normal(size=1 << n) + 1j * nprng.normal(size=1 << n)
        got = butterfly(SpectralVector.from_values(v), factors).values
        want = _dense(factors) @ v
        assert np.max(np.abs(got - want)) < 1e-9


def test_butterfly_hadamard_on_delta():
    n = 5
    v = np.zeros(1 << n)
    v[0] = 1.0
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    out = butterfly(SpectralVector.from_values(v), [h] * n).values
    assert np.allclose(out, 2 ** (-n / 2))


def test_butterfly_anft_factor():
    # mod-2 reduction of the [[1,0],[1,1]] butterfly reproduces the ANFT
    from qgc.boolfn import _anft_mask

    n = 4
    t = 0b1011001110001011
    v = np.array([(t >> i) & 1 for i in range(1 << n)], dtype=float)
    m = np.array([[1, 0], [1, 1]], dtype=float)
    out = butterfly(SpectralVector.from_values(v), [m] * n).values.real
    got = sum((int(round(x)) % 2) << i for i, x in enumerate(out))
    assert got == _anft_mask(t, n)


def test_butterfly_wrong_arity():
    with pytest.raises(ValueError):
        butterfly(SpectralVector.from_values([1, 1]), [])


# -- Gray sequences -------------------------------------------------------------


def test_gray_worked_example():
    assert gray_sequence(3, 2) == [
        (0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0), (2, 0), (2, 1), (2, 2)
    ]
    assert gray_sequence(2, 1) == [(0,), (1,)]


def test_gray_coverage_and_single_steps():
    for k in (2, 3):
        for r in range(1, 9 if k == 2 else 6):
            seq = gray_sequence(k, r)
            assert len(set(seq)) == k**r
            for a, b in zip(seq, seq[1:]):
                diffs = [i for i in range(r) if a[i] != b[i]]
                assert len(diffs) == 1
                assert abs(a[diffs[0]] - b[diffs[0]]) == 1  # adjacent symbols


def test_gray_overflow_guard():
    with pytest.raises(ValueError):
        gray_sequence(3, 40)


# -- multispectrum -----------------------------------------------------------------


def test_multispectrum_step_sequence_n2():
    # first steps: identity word, then H on axis 1, then N H^-1 on axis 1,
    # then H on axis 0 (the worked 2-variable schedule)
    steps = list(gray_steps(3, 2))
    assert steps[0][1] == -1
    assert (steps[1][1], steps[1][2], steps[1][3]) == (1, 0, 1)
    assert (steps[2][1], steps[2][2], steps[2][3]) == (1, 1, 2)
    assert (steps[3][1], steps[3][2], steps[3][3]) == (0, 0, 1)


def test_multispectrum_matches_direct_butterfly(rng):
    import random

    r = random.Random(17)
    f = BooleanFunction(3, r.getrandbits(8))
    sv = SpectralVector.from_function(f)
    mats = list(IHN.matrices)
    count = 0
    for word, spec in multispectrum(sv, IHN):
        direct = butterfly(sv, [mats[c] for c in word]).values
        assert np.max(np.abs(spec.values - direct)) < 1e-9
        count += 1
    assert count == 27


def test_multispectrum_single_matrix():
    sv = SpectralVector.from_function(BooleanFunction(2, 0b0110))
    specs = list(multispectrum(sv, TransformSet.of("H")))
    assert len(specs) == 1


def test_exact_spectra_match_float(rng):
    import random

    r = random.Random(3)
    for _ in range(5):
        f = BooleanFunction(3, r.getrandbits(8))
        sv = SpectralVector.from_function(f)
        exact = {}
        for word, state in ihn_spectra(f):
            exact[word] = state.complex_values() / (2 ** (f.n / 2))
        for word, spec in multispectrum(sv, IHN):
            assert np.max(np.abs(exact[word] - spec.values)) < 1e-9


# -- PAR ----------------------------------------------------------------------------


def test_par_flat_vector_is_2n():
    n = 4
    s = SpectralVector.from_values(np.full(1 << n, 2 ** (-n / 2)))
    assert abs(par(s, IHN) - 2**n) < 1e-9


def test_par_hexacode():
    assert abs(par_ihn(HEXFN) - 4.0) < 1e-9


def test_par_census_n6():
    census = {}
    for rec in classify(6):
        p = round(par_ihn(graph_function(rec.graph())))
        census[p] = census.get(p, 0) + 1
    assert census == {4: 1, 8: 5, 16: 4, 32: 1}


def test_par_ih_le_par_ihn(rng):
    import random

    r = random.Random(5)
    for _ in range(10):
        f = BooleanFunction(4, r.getrandbits(16))
        assert par_ih(f) <= par_ihn(f) + 1e-9


def test_quadratic_spectra_two_magnitudes():
    for rec in classify(5):
        f = graph_function(rec.graph())
        for _, state in ihn_spectra(f):
            a, b = state.sq_magnitudes()
            mags = {(int(x), int(y)) for x, y in zip(a, b)}
            assert len(mags) <= 2


def test_par_ih_reaches_2_lambda_on_bipartite_orbits():
    for rec in classify(6):
        orbit = lc_orbit(rec.graph())
        def bipartite(g):
            from qgc.graphs import bits
            color = [-1] * g.n
            for start in range(g.n):
                if color[start] >= 0:
                    continue
                color[start] = 0
                stack = [start]
                while stack:
                    u = stack.pop()
                    for v in bits(g.adj[u]):
                        if color[v] < 0:
                            color[v] = 1 - color[u]
                            stack.append(v)
                        elif color[v] == color[u]:
                            return False
            return True
        if any(bipartite(g) for g in orbit):
            f = graph_function(rec.graph())
            assert abs(par_ih(f) - 2**rec.lam) < 1e-6


# -- Boolean-flat recovery ----------------------------------------------------------


def test_recovery_worked_example():
    from qgc.transforms import _ZW_N

    f = BooleanFunction.from_anf_string("01,02")
    lat = LatticeVector.from_function(f)
    lat.apply_step(_ZW_N, 0)
    # S = w^{4(01+02+12) + (6x0+6x1+6x2+1)}
    rec = recover_boolean_flat(lat)
    assert rec is not None
    fprime, (const, linear) = rec
    assert fprime.to_anf_string() == "01,02,12"
    assert const == 1
    assert linear == (6, 6, 6)


def test_recovery_of_plain_bipolar():
    f = BooleanFunction.from_anf_string("01,12")
    sv = SpectralVector.from_function(f)
    rec = recover_boolean_flat(sv)
    assert rec is not None
    assert rec[0] == f
    assert rec[1] == (0, (0, 0, 0))


def test_recovery_rejects_non_flat():
    f = BooleanFunction.from_anf_string("01", 2)
    sv = SpectralVector.from_values(np.array([1.0, 2.0, 1.0, 1.0]))
    assert recover_boolean_flat(sv) is None


def test_n_on_any_variable_of_quadratics_recoverable():
    from qgc.transforms import _ZW_N

    for n in range(2, 6):
        for rec_ in classify(n):
            f = graph_function(rec_.graph())
            for v in range(n):
                lat = LatticeVector.from_function(f)
                lat.apply_step(_ZW_N, v)
                rec = recover_boolean_flat(lat)
                assert rec is not None
                from qgc.boolfn import lc_on_function

                assert rec[0].strip_affine() == lc_on_function(f, v)


# -- {I,H,N} orbits --------------------------------------------------------------------


def test_hexacode_ihn_orbit_is_lc_orbit():
    from qgc.boolfn import function_graph

    orb = ihn_orbit(HEXFN)
    assert len(orb) == 2
    lhs = sorted(canonical_key(function_graph(g)) for g in orb)
    rhs = sorted(canonical_key(g) for g in lc_orbit(HEXACODE))
    assert lhs == rhs


def test_ihn_orbit_equals_lc_orbit_all_n_le_5():
    from qgc.boolfn import function_graph

    for n in range(2, 6):
        for rec in classify(n):
            g = rec.graph()
            orb = ihn_orbit(graph_function(g))
            lhs = sorted(canonical_key(function_graph(h)) for h in orb)
            rhs = sorted(canonical_key(k) for k in lc_orbit(g))
            assert lhs == rhs


def test_ix_orbit_of_quadratic_is_singleton():
    assert len(ix_orbit(HEXFN)) == 1


def test_function_orbit_counts_n3():
    assert len(function_orbit_census(3, "ix")) == 3
    assert len(function_orbit_census(3, "ix_ihn")) == 2


def test_apc_invariant_on_ix_ihn_orbits():
    from qgc.boolfn import apc_distance

    f = BooleanFunction.from_anf_string("012,03", 4)
    orb = ix_ihn_orbit(f)
    dists = {apc_distance(g) for g in orb}
    assert len(dists) == 1


def test_cmf_par_apc_invariant_over_all_ix_ihn_orbits_n4():
    # exhaustive over every orbit of connected 4-variable functions
    from qgc.boolfn import apc_distance

    for rep in function_orbit_census(4, "ix_ihn"):
        orbit = ix_ihn_orbit(rep)
        pars = {round(par_ihn(g), 6) for g in orbit}
        apcs = {apc_distance(g) for g in orbit}
        cmfs = {round(cmf(g), 6) for g in orbit}
        assert len(pars) == 1 and len(apcs) == 1 and len(cmfs) == 1, rep.to_anf_string()


def test_extend_function_counts():
    f = BooleanFunction.from_anf_string("01")
    exts = list(extend_function(f))
    assert len(exts) == 2**3 - 1
    assert all(e.n == 3 for e in exts)


# -- CMF / flat spectra / Schmidt ---------------------------------------------------------


def test_cmf_invariant_on_hexacode_orbit():
    vals = {round(cmf(graph_function(g)), 9) for g in lc_orbit(HEXACODE)}
    assert len(vals) == 1


def test_cmf_matches_float_path():
    f = BooleanFunction.from_anf_string("01,12", 3)
    a = cmf(f)
    b = cmf(SpectralVector.from_function(f))
    assert abs(a - b) < 1e-6


def test_count_flat_spectra_small():
    # the zero function on one variable: I and N words are flat, H is not
    assert count_flat_spectra(BooleanFunction(1, 0)) == 2


def test_schmidt_bounds_hexacode():
    lower, upper = schmidt_bounds(HEXFN)
    assert upper == 4.0  # 6 - lambda = 6 - 2
    assert abs(lower - 4.0) < 1e-9  # 6 - log2(4)
    assert lower <= upper + 1e-9


def test_schmidt_upper_le_vertex_cover():
    from qgc.cliques import min_vertex_cover_size

    for rec in classify(5):
        g = rec.graph()
        _, upper = schmidt_bounds(graph_function(g))
        assert upper <= min_vertex_cover_size(g)


# -- constructions ---------------------------------------------------------------------------


def _hexacode_template():
    return Graph.from_edges(
        6,
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
    )


def test_construct2_first_n8_example():
    gamma = {
        (0, 1): (["02,1"], ["3"]),
        (0, 2): (["02,1"], ["4"]),
        (0, 3): (["02,1"], ["5"]),
        (0, 4): (["02,1"], ["6"]),
        (0, 5): (["02,1"], ["7"]),
        (1, 2): (["3"], ["4"]),
        (2, 3): (["4"], ["5"]),
        (3, 4): (["5"], ["6"]),
        (4, 5): (["6"], ["7"]),
        (1, 5): (["3"], ["7"]),
    }
    p = construct2(_hexacode_template(), [3, 1, 1, 1, 1, 1], gamma, {0: "01,02,12"})
    want = BooleanFunction.from_anf_string(
        "023,024,025,026,027,01,02,12,13,14,15,16,17,34,37,45,56,67", 8
    )
    assert p == want
    assert abs(par_ihn(p) - 9.0) < 1e-6


def test_construct2_validation():
    t = Graph.path(2)
    with pytest.raises(ValueError):
        construct2(t, [1], {})  # wrong block count
    with pytest.raises(ValueError):
        construct2(t, [1, 1], {})  # missing edge entry
    with pytest.raises(ValueError):
        construct2(t, [1, 1], {(0, 1): (["0"], ["1", "1"])})  # arity mismatch
    with pytest.raises(ValueError):
        construct2(t, [1, 1], {(0, 1): (["1"], ["1"])})  # support escapes block


def test_construct1_reduces_to_maiorana_mcfarland():
    # L = 2, identity theta, g = 0: p = y0 . pi(y1)
    t = 2
    thetas = [["0", "1"]]
    gammas = [["3", "2"]]  # pi swaps the two block-1 bits
    p = construct1([t, t], thetas, gammas)
    want = BooleanFunction.from_anf_string("03,12", 4)
    assert p == want
    props_bent = True
    from qgc.boolfn import crypto_properties

    assert crypto_properties(p).bent == props_bent


def _random_linear_permutation(block, r):
    """Component ANF strings of a random invertible linear map on a block."""
    t = len(block)
    while True:
        rows = [r.getrandbits(t) for _ in range(t)]
        basis = []
        ok = True
        for v in rows:
            for b in basis:
                v = min(v, v ^ b)
            if v == 0:
                ok = False
                break
            basis.append(v)
            basis.sort(reverse=True)
        if ok:
            break
    return [",".join(str(block[i]) for i in range(t) if (row >> i) & 1) for row in rows]


def test_construct1_par_hn_bound():
    import random

    r = random.Random(23)
    for trial in range(6):
        t = r.choice([1, 2, 3])
        ln = r.choice([2, 3])
        sizes = [t] * ln
        blocks = [list(range(j * t, (j + 1) * t)) for j in range(ln)]
        thetas = []
        gammas = []
        for j in range(ln - 1):
            thetas.append(_random_linear_permutation(blocks[j], r))
            gammas.append(_random_linear_permutation(blocks[j + 1], r))
        offsets = {j: _random_quadratic(blocks[j], r) for j in range(ln)}
        p = construct1(sizes, thetas, gammas, offsets)
        assert par_hn(p) <= 2**t + 1e-6


def _random_quadratic(block, r):
    monos = []
    for i, u in enumerate(block):
        for v in block[i + 1 :]:
            if r.random() < 0.5:
                monos.append((u, v))
    if not monos:
        return "0" if False else BooleanFunction.from_monomials(max(block) + 1, [])
    return ",".join(f"{u}{v}" for u, v in monos)
