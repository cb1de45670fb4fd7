"""Pure-Python kernels: canonical labeling, code distance, weight counts, cliques.

This module mirrors the API of the compiled extension ``qgc._core``.  The
selector in :mod:`qgc.kernels` picks whichever is available.  All functions
work on graphs given as a vertex count ``n`` and adjacency bitmask rows
(``adj[i]`` has bit ``j`` set iff ``{i,j}`` is an edge).
"""

from __future__ import annotations

BACKEND = "pure"

_MAX_GENS = 64


def _pack_graph6(n: int, bits: list[int]) -> bytes:
    """Pack upper-triangle bits (column-major) into graph6 bytes for n <= 62."""
    out = [n + 63]
    acc = 0
    nb = 0
    for b in bits:
        acc = (acc << 1) | b
        nb += 1
        if nb == 6:
            out.append(acc + 63)
            acc = 0
            nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out)


def _cols_to_bits(n: int, cols: list[int]) -> list[int]:
    # column p holds bits x(0,p)..x(p-1,p), x(0,p) most significant
    bits = []
    for p in range(1, n):
        c = cols[p]
        for i in range(p - 1, -1, -1):
            bits.append((c >> i) & 1)
    return bits


def canon_graph(n, adj, colors=None):
    """Canonically label a graph, optionally respecting an initial coloring.

    Returns ``(key, perm)`` where ``key`` is the graph6 encoding of the
    canonical relabeling (the lexicographically least over all labelings
    that list color cells in ascending color order) and ``perm[old]`` is
    the new label of vertex ``old``.
    """
    if n == 0:
        return b"?", ()
    if colors is None:
        colors = [0] * n
    # positions grouped by ascending color
    order_colors = sorted(set(colors))
    pos_color = []
    for c in order_colors:
        pos_color.extend([c] * sum(1 for x in colors if x == c))

    placed = [-1] * n
    placed_mask = 0
    cur_cols = [0] * n
    best_cols = None
    best_placed = None
    gens = []
    gen_set = set()

    adjb = list(adj)
    color_of = list(colors)

    def col_value(v, p):
        c = 0
        av = adjb[v]
        for i in range(p):
            c = (c << 1) | ((av >> placed[i]) & 1)
        return c

    def orbit_reps(p, tried):
        """Union-find roots for vertices, using generators fixing placed[:p]."""
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        prefix = placed[:p]
        for g in gens:
            ok = True
            for u in prefix:
                if g[u] != u:
                    ok = False
                    break
            if not ok:
                continue
            for a in range(n):
                ra, rb = find(a), find(g[a])
                if ra != rb:
                    parent[ra] = rb
        return find

    # DFS returning the depth to unwind to (unwind while depth > result)
    def dfs(p, tight):
        nonlocal best_cols, best_placed, placed_mask
        if p == n:
            if tight and best_cols is not None:
                # automorphism: current labeling encodes identically to best
                g = [0] * n
                diverge = n
                for i in range(n):
                    g[placed[i]] = best_placed[i]
                    if diverge == n and placed[i] != best_placed[i]:
                        diverge = i
                tg = tuple(g)
                if diverge < n and tg not in gen_set and len(gens) < _MAX_GENS:
                    gen_set.add(tg)
                    gens.append(tg)
                return diverge
            best_cols = cur_cols[:]
            best_placed = placed[:]
            return n  # unwind one level, stay tight
        color = pos_color[p]
        pool = [v for v in range(n) if not (placed_mask >> v) & 1 and color_of[v] == color]
        cmin = None
        cand = []
        for v in pool:
            c = col_value(v, p)
            if cmin is None or c < cmin:
                cmin = c
                cand = [v]
            elif c == cmin:
                cand.append(v)
        if tight and best_cols is not None:
            if cmin > best_cols[p]:
                return n  # prune; nothing here can match best
            child_tight = cmin == best_cols[p]
        else:
            child_tight = False
        ngen_seen = -1
        find = None
        tried = []
        for v in cand:
            if tried and gens:
                if len(gens) != ngen_seen:
                    find = orbit_reps(p, tried)
                    ngen_seen = len(gens)
                rv = find(v)
                if any(find(u) == rv for u in tried):
                    continue
            placed[p] = v
            placed_mask |= 1 << v
            cur_cols[p] = cmin
            before = best_placed
            r = dfs(p + 1, child_tight)
            placed_mask &= ~(1 << v)
            placed[p] = -1
            if best_placed is not before:
                # best was replaced inside; this node now lies on the best path
                child_tight = True
                tight = True
            if r < p:
                return r
            tried.append(v)
        return n

    dfs(0, False)
    perm = [0] * n
    for i, v in enumerate(best_placed):
        perm[v] = i
    key = _pack_graph6(n, _cols_to_bits(n, best_cols))
    return key, tuple(perm)


def revolving_door(n: int, k: int):
    """Yield (removed, added) element swaps visiting every k-subset of 0..n-1.

    The first visited subset is {0,..,k-1} (yielded as the initial step
    (-1, -1)); each later step swaps exactly one element out and one in.
    """
    if k < 0 or k > n:
        return
    yield (-1, -1)
    if k == 0 or k == n:
        return
    c = list(range(k)) + [n]  # c[0..k-1] ascending, sentinel c[k] = n
    while True:
        if k & 1:
            if c[0] + 1 < c[1]:
                yield (c[0], c[0] + 1)
                c[0] += 1
                continue
            j = 1
            decrease = True
        else:
            if c[0] > 0:
                yield (c[0], c[0] - 1)
                c[0] -= 1
                continue
            j = 1
            decrease = False
        # alternate "decrease c[j]" / "increase c[j]" with rising j
        moved = False
        while j < k:
            if decrease:
                # here c[j] = c[j-1] + 1
                if c[j] >= j + 1:
                    yield (c[j], j - 1)
                    c[j] = c[j - 1]
                    c[j - 1] = j - 1
                    moved = True
                    break
            else:
                # here c[j-1] = j - 1
                if c[j] + 1 < c[j + 1]:
                    yield (j - 1, c[j] + 1)
                    c[j - 1] = c[j]
                    c[j] += 1
                    moved = True
                    break
            j += 1
            decrease = not decrease
        if not moved:
            return


def graph_code_distance(n: int, zrows, cap: int | None = None) -> int:
    """Distance of the self-dual code with generator (Z|I), Z the adjacency rows.

    Enumerates sums of i rows for i = 1, 2, ... with early exit: a sum of k
    rows has weight >= k, so sizes >= d cannot improve.  ``cap``, if given,
    stops the search once d <= cap is established (returns the running d).
    """
    d = min((zrows[i] | (1 << i)).bit_count() for i in range(n))
    i = 2
    while i < d and (cap is None or d > cap):
        z = 0
        x = 0
        for out, add in revolving_door(n, i):
            if out < 0:
                z = 0
                x = 0
                for j in range(i):
                    z ^= zrows[j]
                    x ^= 1 << j
            else:
                z ^= zrows[out] ^ zrows[add]
                x ^= (1 << out) | (1 << add)
            w = (z | x).bit_count()
            if w < d:
                d = w
                if d <= i:
                    return d
        i += 1
    return d


def graph_code_weight_hist(n: int, zrows, p: int) -> list[int]:
    """Counts (w_0..w_p) of codewords of weight <= p, via sums of <= p rows."""
    counts = [0] * (p + 1)
    counts[0] = 1
    for i in range(1, p + 1):
        z = 0
        x = 0
        for out, add in revolving_door(n, i):
            if out < 0:
                z = 0
                x = 0
                for j in range(i):
                    z ^= zrows[j]
                    x ^= 1 << j
            else:
                z ^= zrows[out] ^ zrows[add]
                x ^= (1 << out) | (1 << add)
            w = (z | x).bit_count()
            if w <= p:
                counts[w] += 1
    return counts


def max_independent_set(n: int, adj) -> tuple[int, int]:
    """Exact maximum independent set via branch and bound: (size, bitmask)."""
    best = [0, 0]
    adjb = list(adj)

    def rec(cur, size, pool):
        # greedy: vertices with no neighbours in the pool are free
        while pool:
            free = 0
            deg1 = -1
            m = pool
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                dv = adjb[v] & pool
                if dv == 0:
                    free |= 1 << v
                elif deg1 < 0 and dv & (dv - 1) == 0:
                    deg1 = v
            if free:
                cur |= free
                size += free.bit_count()
                pool &= ~free
                continue
            if deg1 >= 0:
                cur |= 1 << deg1
                size += 1
                pool &= ~(adjb[deg1] | (1 << deg1))
                continue
            break
        if pool == 0:
            if size > best[0]:
                best[0] = size
                best[1] = cur
            return
        if size + pool.bit_count() <= best[0]:
            return
        # branch on the pool vertex of highest pool-degree
        v = -1
        dbest = -1
        m = pool
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adjb[u] & pool).bit_count()
            if d > dbest:
                dbest = d
                v = u
        rec(cur | (1 << v), size + 1, pool & ~(adjb[v] | (1 << v)))
        rec(cur, size, pool & ~(1 << v))

    rec(0, 0, (1 << n) - 1)
    return best[0], best[1]


def maximal_cliques(n: int, adj) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    out = []
    adjb = list(adj)

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot with most neighbours in p
        u = -1
        dbest = -1
        m = p | x
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adjb[w] & p).bit_count()
            if d > dbest:
                dbest = d
                u = w
        m = p & ~adjb[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            vb = 1 << v
            bk(r | vb, p & adjb[v], x & adjb[v])
            p &= ~vb
            x |= vb

    bk(0, (1 << n) - 1, 0)
    return out
