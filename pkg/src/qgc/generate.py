"""Exhaustive generation of non-isomorphic connected graphs."""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_key
from .graphs import Graph, extensions, from_graph6, is_connected

# |connected non-isomorphic graphs| for n = 1..8, used in tests and sanity
# checks; larger counts are generated on demand.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

GENERATE_MAX_N = 10


def connected_keys(n: int) -> list[bytes]:
    """Canonical graph6 keys of all non-isomorphic connected graphs on n
    vertices, sorted.  Built by extending the classes one vertex at a time:
    every connected graph has a non-cut vertex, so extending every class on
    n-1 vertices by every nonempty neighbour set reaches every class."""
    if not 1 <= n <= GENERATE_MAX_N:
        raise ValueError(f"n must be in 1..{GENERATE_MAX_N}")
    keys = [canonical_key(Graph.empty(1))]
    for _ in range(2, n + 1):
        nxt: set[bytes] = set()
        for key in keys:
            g = from_graph6(key)
            for ext in extensions(g):
                nxt.add(canonical_key(ext))
        keys = sorted(nxt)
    return keys


def generate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices, in canonical-key order."""
    for key in connected_keys(n):
        g = from_graph6(key)
        assert is_connected(g)
        yield g
