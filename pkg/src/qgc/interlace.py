"""The three-term interlace polynomial Q(G, z).

Q satisfies Q(G) = Q(G-u) + Q(G^u - u) + Q(G^{uv} - u) for any vertex u
with a neighbour v, where G^{uv} = ((G^u)^v)^u is the edge pivot, with
Q(edgeless on k vertices) = z^k.  Its degree equals the maximum
independence number over the LC orbit, so 2^deg Q is the peak-to-average
power ratio of the corresponding quadratic function over {I,H,N}^n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_key
from .graphs import Graph, bits, induced_subgraph, local_complement


@dataclass(frozen=True)
class InterlacePolynomial:
    """Coefficients of Q(G, z), index = power of z."""

    coeffs: tuple[int, ...]

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: float) -> float:
        return sum(c * z**k for k, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree(), -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append(f"{c}z^{k}" if k else str(c))
        return " + ".join(terms) if terms else "0"


def _add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    size = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
    )


_memo: dict[bytes, tuple[int, ...]] = {}


def _delete(g: Graph, u: int) -> Graph:
    return induced_subgraph(g, ((1 << g.n) - 1) ^ (1 << u))


def _q(g: Graph) -> tuple[int, ...]:
    # base case: no edges left, Q = z^n
    if all(row == 0 for row in g.adj):
        return (0,) * g.n + (1,)
    key = canonical_key(g)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    u = next(i for i in range(g.n) if g.adj[i])
    v = next(iter(bits(g.adj[u])))
    gu = local_complement(g, u)
    pivot = local_complement(local_complement(gu, v), u)
    res = _add(
        _add(_q(_delete(g, u)), _q(_delete(gu, u))),
        _q(_delete(pivot, u)),
    )
    _memo[key] = res
    return res


def interlace_q(g: Graph) -> InterlacePolynomial:
    """Q(G, z) by the three-branch recursion, memoized on canonical forms
    (the polynomial is an isomorphism invariant)."""
    return InterlacePolynomial(_q(g))
