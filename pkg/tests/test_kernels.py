"""Cross-validation of the compiled and pure kernel backends."""

import random
from math import comb

import pytest

from qgc import _pure
from qgc import kernels


try:
    from qgc import _core
except ImportError:
    _core = None

BACKENDS = [_pure] if _core is None else [_pure, _core]


def _random_adj(rng, n):
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < 0.45:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def test_backend_selected():
    assert kernels.BACKEND in ("compiled", "pure")


@pytest.mark.parametrize("backend", BACKENDS)
def test_revolving_door_properties(backend):
    for n in range(0, 9):
        for k in range(0, n + 1):
            seen = set()
            cur = set()
            for out, add in backend.revolving_door(n, k):
                if out < 0:
                    cur = set(range(k))
                else:
                    assert out in cur and add not in cur
                    cur.remove(out)
                    cur.add(add)
                t = tuple(sorted(cur))
                assert t not in seen
                seen.add(t)
            assert len(seen) == comb(n, k)


@pytest.mark.skipif(_core is None, reason="compiled backend not built")
def test_backends_agree(rng):
    r = random.Random(2024)
    for _ in range(300):
        n = r.randint(1, 10)
        adj = _random_adj(r, n)
        colors = None if r.random() < 0.5 else [r.randint(0, 2) for _ in range(n)]
        assert _core.canon_graph(n, adj, colors) == _pure.canon_graph(n, adj, colors)
        assert _core.graph_code_distance(n, adj) == _pure.graph_code_distance(n, adj)
        p = r.randint(0, n)
        assert _core.graph_code_weight_hist(n, adj, p) == _pure.graph_code_weight_hist(
            n, adj, p
        )
        assert (
            _core.max_independent_set(n, adj)[0] == _pure.max_independent_set(n, adj)[0]
        )
        assert sorted(_core.maximal_cliques(n, adj)) == sorted(
            _pure.maximal_cliques(n, adj)
        )


@pytest.mark.parametrize("backend", BACKENDS)
def test_distance_small_oracle(backend, rng):
    r = random.Random(7)
    for _ in range(60):
        n = r.randint(1, 7)
        adj = _random_adj(r, n)
        best = n + 1
        for mask in range(1, 1 << n):
            z = 0
            for i in range(n):
                if (mask >> i) & 1:
                    z ^= adj[i]
            best = min(best, (z | mask).bit_count())
        assert backend.graph_code_distance(n, adj) == best
