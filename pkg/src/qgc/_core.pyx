# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical labeling, code distance, weight counts,
independent sets, cliques.  Mirrors the API of qgc._pure; graphs are a
vertex count plus adjacency bitmask rows (64-bit, n <= 32)."""

from libc.stdint cimport uint64_t, int64_t
from libc.string cimport memcpy, memset

BACKEND = "compiled"

cdef extern from *:
    """
    #if defined(__GNUC__)
    static inline int qgc_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int qgc_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int qgc_popcount64(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    static inline int qgc_ctz64(unsigned long long x) {
        int c = 0; while (!(x & 1)) { x >>= 1; ++c; } return c;
    }
    #endif
    """
    int qgc_popcount64(uint64_t x) nogil
    int qgc_ctz64(uint64_t x) nogil

DEF MAXN = 32
DEF MAXGENS = 64


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

cdef struct CanonState:
    int n
    uint64_t adj[MAXN]
    int pos_color[MAXN]
    int color_of[MAXN]
    int placed[MAXN]
    uint64_t placed_mask
    uint64_t cur_cols[MAXN]
    uint64_t best_cols[MAXN]
    int best_placed[MAXN]
    int have_best
    int gens[MAXGENS][MAXN]
    int ngens
    int best_serial


cdef uint64_t _col_value(CanonState *st, int v, int p) nogil:
    cdef uint64_t c = 0
    cdef uint64_t av = st.adj[v]
    cdef int i
    for i in range(p):
        c = (c << 1) | ((av >> st.placed[i]) & 1)
    return c


cdef void _orbit_roots(CanonState *st, int p, int *parent) nogil:
    """Union-find roots under generators fixing placed[0..p-1] pointwise."""
    cdef int i, a, ra, rb, g, u
    cdef int ok
    for i in range(st.n):
        parent[i] = i
    for g in range(st.ngens):
        ok = 1
        for i in range(p):
            u = st.placed[i]
            if st.gens[g][u] != u:
                ok = 0
                break
        if not ok:
            continue
        for a in range(st.n):
            ra = a
            while parent[ra] != ra:
                ra = parent[ra]
            rb = st.gens[g][a]
            while parent[rb] != rb:
                rb = parent[rb]
            if ra != rb:
                parent[ra] = rb


cdef int _find_root(int *parent, int x) nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef int _canon_dfs(CanonState *st, int p, int tight) nogil:
    cdef int i, v, diverge, serial_before, r, ci
    cdef uint64_t c, cmin
    cdef int child_tight
    cdef int cand[MAXN]
    cdef int ncand
    cdef int tried[MAXN]
    cdef int ntried
    cdef int parent[MAXN]
    cdef int gens_seen
    cdef int skip, t, rv

    if p == st.n:
        if tight and st.have_best:
            diverge = st.n
            for i in range(st.n):
                if st.placed[i] != st.best_placed[i]:
                    diverge = i
                    break
            if diverge < st.n and st.ngens < MAXGENS:
                for i in range(st.n):
                    st.gens[st.ngens][st.placed[i]] = st.best_placed[i]
                st.ngens += 1
            return diverge
        for i in range(st.n):
            st.best_cols[i] = st.cur_cols[i]
            st.best_placed[i] = st.placed[i]
        st.have_best = 1
        st.best_serial += 1
        return st.n

    # candidates: unplaced vertices of this position's color with minimal
    # column value
    cmin = 0
    ncand = 0
    ci = st.pos_color[p]
    for v in range(st.n):
        if (st.placed_mask >> v) & 1:
            continue
        if st.color_of[v] != ci:
            continue
        c = _col_value(st, v, p)
        if ncand == 0 or c < cmin:
            cmin = c
            cand[0] = v
            ncand = 1
        elif c == cmin:
            cand[ncand] = v
            ncand += 1
    if tight and st.have_best:
        if cmin > st.best_cols[p]:
            return st.n
        child_tight = cmin == st.best_cols[p]
    else:
        child_tight = 0

    ntried = 0
    gens_seen = -1
    for i in range(ncand):
        v = cand[i]
        if ntried > 0 and st.ngens > 0:
            if st.ngens != gens_seen:
                _orbit_roots(st, p, parent)
                gens_seen = st.ngens
            rv = _find_root(parent, v)
            skip = 0
            for t in range(ntried):
                if _find_root(parent, tried[t]) == rv:
                    skip = 1
                    break
            if skip:
                continue
        st.placed[p] = v
        st.placed_mask |= (<uint64_t>1) << v
        st.cur_cols[p] = cmin
        serial_before = st.best_serial
        r = _canon_dfs(st, p + 1, child_tight)
        st.placed_mask &= ~((<uint64_t>1) << v)
        if st.best_serial != serial_before:
            child_tight = 1
            tight = 1
        if r < p:
            return r
        tried[ntried] = v
        ntried += 1
    return st.n


def canon_graph(int n, adj, colors=None):
    """Canonically label a graph (optionally with an initial coloring).
    Returns (graph6 bytes of the canonical labeling, perm) with
    perm[old] = new label."""
    cdef CanonState st
    cdef int i, v, c
    if n < 1 or n > MAXN:
        raise ValueError("vertex count out of range")
    st.n = n
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
    # positions grouped by ascending color
    cdef list cols
    if colors is None:
        cols = [0] * n
    else:
        cols = list(colors)
    order = sorted(set(cols))
    cdef int pos = 0
    for c in order:
        for v in range(n):
            if cols[v] == c:
                st.pos_color[pos] = c
                pos += 1
    for v in range(n):
        st.color_of[v] = cols[v]
    st.placed_mask = 0
    st.have_best = 0
    st.ngens = 0
    st.best_serial = 0
    with nogil:
        _canon_dfs(&st, 0, 0)
    perm = [0] * n
    for i in range(n):
        perm[st.best_placed[i]] = i
    # pack the column values into graph6
    out = bytearray()
    out.append(n + 63)
    cdef int acc = 0, nb = 0, pcol, b
    for pcol in range(1, n):
        for i in range(pcol - 1, -1, -1):
            b = <int>((st.best_cols[pcol] >> i) & 1)
            acc = (acc << 1) | b
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out), tuple(perm)


# ---------------------------------------------------------------------------
# revolving-door combination enumeration
# ---------------------------------------------------------------------------

def revolving_door(int n, int k):
    """Yield (removed, added) swaps visiting every k-subset of 0..n-1;
    the initial subset {0..k-1} is signalled by (-1, -1)."""
    cdef int c[MAXN + 1]
    cdef int j
    cdef int decrease, moved
    if k < 0 or k > n:
        return
    yield (-1, -1)
    if k == 0 or k == n:
        return
    for j in range(k):
        c[j] = j
    c[k] = n
    while True:
        if k & 1:
            if c[0] + 1 < c[1]:
                yield (c[0], c[0] + 1)
                c[0] += 1
                continue
            j = 1
            decrease = 1
        else:
            if c[0] > 0:
                yield (c[0], c[0] - 1)
                c[0] -= 1
                continue
            j = 1
            decrease = 0
        moved = 0
        while j < k:
            if decrease:
                if c[j] >= j + 1:
                    yield (c[j], j - 1)
                    c[j] = c[j - 1]
                    c[j - 1] = j - 1
                    moved = 1
                    break
            else:
                if c[j] + 1 < c[j + 1]:
                    yield (j - 1, c[j] + 1)
                    c[j - 1] = c[j]
                    c[j] += 1
                    moved = 1
                    break
            j += 1
            decrease = not decrease
        if not moved:
            return


# ---------------------------------------------------------------------------
# graph-code distance and weight counts
# ---------------------------------------------------------------------------

cdef int _subset_sweep_min(uint64_t *z, int n, int k, int stop_at) nogil:
    """Minimum popcount(zsum | xsum) over all k-subsets of rows; early out
    when a weight <= stop_at is found."""
    cdef int c[MAXN + 1]
    cdef int j, w, best
    cdef uint64_t zacc = 0, xacc = 0
    cdef int decrease, moved
    for j in range(k):
        c[j] = j
        zacc ^= z[j]
        xacc ^= (<uint64_t>1) << j
    c[k] = n
    best = qgc_popcount64(zacc | xacc)
    if best <= stop_at:
        return best
    if k == 0 or k == n:
        return best
    while True:
        if k & 1:
            if c[0] + 1 < c[1]:
                zacc ^= z[c[0]] ^ z[c[0] + 1]
                xacc ^= ((<uint64_t>1) << c[0]) | ((<uint64_t>1) << (c[0] + 1))
                c[0] += 1
                w = qgc_popcount64(zacc | xacc)
                if w < best:
                    best = w
                    if best <= stop_at:
                        return best
                continue
            j = 1
            decrease = 1
        else:
            if c[0] > 0:
                zacc ^= z[c[0]] ^ z[c[0] - 1]
                xacc ^= ((<uint64_t>1) << c[0]) | ((<uint64_t>1) << (c[0] - 1))
                c[0] -= 1
                w = qgc_popcount64(zacc | xacc)
                if w < best:
                    best = w
                    if best <= stop_at:
                        return best
                continue
            j = 1
            decrease = 0
        moved = 0
        while j < k:
            if decrease:
                if c[j] >= j + 1:
                    zacc ^= z[c[j]] ^ z[j - 1]
                    xacc ^= ((<uint64_t>1) << c[j]) | ((<uint64_t>1) << (j - 1))
                    c[j] = c[j - 1]
                    c[j - 1] = j - 1
                    moved = 1
                    break
            else:
                if c[j] + 1 < c[j + 1]:
                    zacc ^= z[j - 1] ^ z[c[j] + 1]
                    xacc ^= ((<uint64_t>1) << (j - 1)) | ((<uint64_t>1) << (c[j] + 1))
                    c[j - 1] = c[j]
                    c[j] += 1
                    moved = 1
                    break
            j += 1
            decrease = not decrease
        if not moved:
            return best
        w = qgc_popcount64(zacc | xacc)
        if w < best:
            best = w
            if best <= stop_at:
                return best
    return best


def graph_code_distance(int n, zrows, cap=None):
    """Distance of the code with generator (Z|I): sums of i = 1, 2, ... rows,
    stopping once i >= d (a sum of k rows has weight >= k)."""
    cdef uint64_t z[MAXN]
    cdef int i, d, w, icap
    for i in range(n):
        z[i] = <uint64_t>zrows[i]
    d = n + 1
    for i in range(n):
        w = qgc_popcount64(z[i] | ((<uint64_t>1) << i))
        if w < d:
            d = w
    icap = -1 if cap is None else <int>cap
    i = 2
    while i < d and (icap < 0 or d > icap):
        with nogil:
            w = _subset_sweep_min(z, n, i, i)
        if w < d:
            d = w
        i += 1
    return d


cdef void _subset_sweep_hist(uint64_t *z, int n, int k, int p, int64_t *counts) nogil:
    cdef int c[MAXN + 1]
    cdef int j, w
    cdef uint64_t zacc = 0, xacc = 0
    cdef int decrease, moved
    for j in range(k):
        c[j] = j
        zacc ^= z[j]
        xacc ^= (<uint64_t>1) << j
    c[k] = n
    w = qgc_popcount64(zacc | xacc)
    if w <= p:
        counts[w] += 1
    if k == 0 or k == n:
        return
    while True:
        if k & 1:
            if c[0] + 1 < c[1]:
                zacc ^= z[c[0]] ^ z[c[0] + 1]
                xacc ^= ((<uint64_t>1) << c[0]) | ((<uint64_t>1) << (c[0] + 1))
                c[0] += 1
                w = qgc_popcount64(zacc | xacc)
                if w <= p:
                    counts[w] += 1
                continue
            j = 1
            decrease = 1
        else:
            if c[0] > 0:
                zacc ^= z[c[0]] ^ z[c[0] - 1]
                xacc ^= ((<uint64_t>1) << c[0]) | ((<uint64_t>1) << (c[0] - 1))
                c[0] -= 1
                w = qgc_popcount64(zacc | xacc)
                if w <= p:
                    counts[w] += 1
                continue
            j = 1
            decrease = 0
        moved = 0
        while j < k:
            if decrease:
                if c[j] >= j + 1:
                    zacc ^= z[c[j]] ^ z[j - 1]
                    xacc ^= ((<uint64_t>1) << c[j]) | ((<uint64_t>1) << (j - 1))
                    c[j] = c[j - 1]
                    c[j - 1] = j - 1
                    moved = 1
                    break
            else:
                if c[j] + 1 < c[j + 1]:
                    zacc ^= z[j - 1] ^ z[c[j] + 1]
                    xacc ^= ((<uint64_t>1) << (j - 1)) | ((<uint64_t>1) << (c[j] + 1))
                    c[j - 1] = c[j]
                    c[j] += 1
                    moved = 1
                    break
            j += 1
            decrease = not decrease
        if not moved:
            return
        w = qgc_popcount64(zacc | xacc)
        if w <= p:
            counts[w] += 1


def graph_code_weight_hist(int n, zrows, int p):
    """Counts (w_0..w_p) of codewords of weight <= p via sums of <= p rows."""
    cdef uint64_t z[MAXN]
    cdef int64_t counts[MAXN + 1]
    cdef int i, k
    for i in range(n):
        z[i] = <uint64_t>zrows[i]
    memset(counts, 0, sizeof(counts))
    counts[0] = 1
    with nogil:
        for k in range(1, p + 1):
            _subset_sweep_hist(z, n, k, p, counts)
    return [counts[i] for i in range(p + 1)]


# ---------------------------------------------------------------------------
# maximum independent set / maximal cliques
# ---------------------------------------------------------------------------

cdef struct MisState:
    int n
    uint64_t adj[MAXN]
    int best_size
    uint64_t best_mask


cdef void _mis_rec(MisState *st, uint64_t cur, int size, uint64_t pool) nogil:
    cdef uint64_t free_mask, m, dv
    cdef int v, deg1, d, dbest, u
    while pool:
        free_mask = 0
        deg1 = -1
        m = pool
        while m:
            v = qgc_ctz64(m)
            m &= m - 1
            dv = st.adj[v] & pool
            if dv == 0:
                free_mask |= (<uint64_t>1) << v
            elif deg1 < 0 and (dv & (dv - 1)) == 0:
                deg1 = v
        if free_mask:
            cur |= free_mask
            size += qgc_popcount64(free_mask)
            pool &= ~free_mask
            continue
        if deg1 >= 0:
            cur |= (<uint64_t>1) << deg1
            size += 1
            pool &= ~(st.adj[deg1] | ((<uint64_t>1) << deg1))
            continue
        break
    if pool == 0:
        if size > st.best_size:
            st.best_size = size
            st.best_mask = cur
        return
    if size + qgc_popcount64(pool) <= st.best_size:
        return
    dbest = -1
    v = -1
    m = pool
    while m:
        u = qgc_ctz64(m)
        m &= m - 1
        d = qgc_popcount64(st.adj[u] & pool)
        if d > dbest:
            dbest = d
            v = u
    _mis_rec(st, cur | ((<uint64_t>1) << v), size + 1,
             pool & ~(st.adj[v] | ((<uint64_t>1) << v)))
    _mis_rec(st, cur, size, pool & ~((<uint64_t>1) << v))


def max_independent_set(int n, adj):
    """Exact maximum independent set: (size, bitmask)."""
    cdef MisState st
    cdef int i
    st.n = n
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
    st.best_size = 0
    st.best_mask = 0
    with nogil:
        _mis_rec(&st, 0, 0, ((<uint64_t>1) << n) - 1)
    return st.best_size, st.best_mask


def maximal_cliques(int n, adj):
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    cdef uint64_t a[MAXN]
    cdef int i
    for i in range(n):
        a[i] = <uint64_t>adj[i]
    out = []
    _bk(n, a, 0, ((<uint64_t>1) << n) - 1, 0, out)
    return out


cdef _bk(int n, uint64_t *adj, uint64_t r, uint64_t p, uint64_t x, list out):
    cdef uint64_t m, vb
    cdef int u, w, v, d, dbest
    if p == 0 and x == 0:
        out.append(r)
        return
    dbest = -1
    u = -1
    m = p | x
    while m:
        w = qgc_ctz64(m)
        m &= m - 1
        d = qgc_popcount64(adj[w] & p)
        if d > dbest:
            dbest = d
            u = w
    m = p & ~adj[u]
    while m:
        v = qgc_ctz64(m)
        m &= m - 1
        vb = (<uint64_t>1) << v
        _bk(n, adj, r | vb, p & adj[v], x & adj[v], out)
        p &= ~vb
        x |= vb
