# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels`` for graphs with <= 64 vertices.

Each function takes the adjacency rows as Python ints and returns exactly
what the pure-Python version returns.
"""

ctypedef unsigned long long u64

cdef extern from *:
    int popcount64 "__builtin_popcountll"(u64) nogil
    int ctz64 "__builtin_ctzll"(u64) nogil

cdef enum:
    MAXN = 64


cdef inline u64 _full(int n) noexcept nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef int _load(rows, u64* out) except -1:
    cdef int n = len(rows)
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        out[i] = <u64>rows[i]
    return n


# -- k-cliques -----------------------------------------------------------

cdef int _kc(const u64* rows, u64 mask, u64 cand, int depth, int k, list out) except -1:
    cdef u64 low
    cdef int v
    if depth == k:
        out.append(mask)
        return 0
    while cand:
        if popcount64(cand) < k - depth:
            return 0
        v = ctz64(cand)
        low = (<u64>1) << v
        cand ^= low
        _kc(rows, mask | low, cand & rows[v], depth + 1, k, out)
    return 0


def k_cliques(rows, int k):
    cdef u64 r[MAXN]
    cdef int n = _load(rows, r)
    cdef list out = []
    if k == 0:
        return [0]
    _kc(r, 0, _full(n), 0, k, out)
    return out


cdef long long _count(const u64* rows, u64 cand, int depth, int k) noexcept nogil:
    cdef long long total = 0
    cdef int v
    if depth == k - 1:
        return popcount64(cand)
    while cand:
        if popcount64(cand) < k - depth:
            break
        v = ctz64(cand)
        cand &= cand - 1
        total += _count(rows, cand & rows[v], depth + 1, k)
    return total


def count_k_cliques(rows, int k):
    cdef u64 r[MAXN]
    cdef int n = _load(rows, r)
    if k == 0:
        return 1
    return _count(r, _full(n), 0, k)


# -- maximal cliques -----------------------------------------------------

cdef int _bk(const u64* rows, u64 r, u64 p, u64 x, list out) except -1:
    cdef u64 px, todo, low, pivot_row = 0
    cdef int best = -1, c, v
    if not p:
        if not x:
            out.append(r)
        return 0
    px = p | x
    while px:
        v = ctz64(px)
        px &= px - 1
        c = popcount64(p & rows[v])
        if c > best:
            best = c
            pivot_row = rows[v]
    todo = p & ~pivot_row
    while todo:
        v = ctz64(todo)
        low = (<u64>1) << v
        todo ^= low
        _bk(rows, r | low, p & rows[v], x & rows[v], out)
        p ^= low
        x |= low
    return 0


def maximal_cliques(rows):
    cdef u64 r[MAXN]
    cdef int n = _load(rows, r)
    cdef list out = []
    _bk(r, 0, _full(n), 0, out)
    return out


cdef void _mc(const u64* rows, int size, u64 p, int* best) noexcept nogil:
    cdef int v
    if not p:
        if size > best[0]:
            best[0] = size
        return
    while p:
        if size + popcount64(p) <= best[0]:
            return
        v = ctz64(p)
        p &= p - 1
        _mc(rows, size + 1, p & rows[v], best)


def clique_number(rows):
    cdef u64 r[MAXN]
    cdef int n = _load(rows, r)
    cdef int best = 0
    _mc(r, 0, _full(n), &best)
    return best


# -- exact colouring -----------------------------------------------------

cdef struct ColorState:
    int n
    int lower
    int best_k
    u64 uncolored
    u64 rows[MAXN]
    u64 classes[MAXN + 1]
    int color[MAXN]
    int best_color[MAXN]


cdef void _search(ColorState* s, int used, int ncolored) noexcept nogil:
    cdef int v = -1, w, c, sat, deg, best_sat = -1, best_deg = -1
    cdef u64 m, row, bit
    if used >= s.best_k:
        return
    if ncolored == s.n:
        s.best_k = used
        for w in range(s.n):
            s.best_color[w] = s.color[w]
        return
    m = s.uncolored
    while m:
        w = ctz64(m)
        m &= m - 1
        row = s.rows[w]
        sat = 0
        for c in range(used):
            if s.classes[c] & row:
                sat += 1
        if sat < best_sat:
            continue
        deg = popcount64(row & s.uncolored)
        if sat > best_sat or deg > best_deg:
            v = w
            best_sat = sat
            best_deg = deg
    bit = (<u64>1) << v
    row = s.rows[v]
    s.uncolored ^= bit
    for c in range(used):
        if not (s.classes[c] & row):
            s.classes[c] |= bit
            s.color[v] = c
            _search(s, used, ncolored + 1)
            s.classes[c] ^= bit
            if s.best_k <= s.lower or used >= s.best_k:
                break
    if used + 1 < s.best_k and s.best_k > s.lower:
        s.classes[used] = bit
        s.color[v] = used
        _search(s, used + 1, ncolored + 1)
        s.classes[used] = 0
    s.color[v] = -1
    s.uncolored |= bit


def exact_coloring(rows, int lower):
    cdef ColorState s
    cdef int n = _load(rows, s.rows)
    if n == 0:
        return []
    s.n = n
    s.lower = lower
    s.best_k = n + 1
    s.uncolored = _full(n)
    for i in range(n):
        s.color[i] = -1
        s.best_color[i] = -1
    for i in range(n + 1):
        s.classes[i] = 0
    with nogil:
        _search(&s, 0, 0)
    return [s.best_color[i] for i in range(n)]
