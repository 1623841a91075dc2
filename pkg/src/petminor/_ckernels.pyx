# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels for graphs on at most 64 vertices.

Same functions, results and node counts as ``_pykernels``; rows are packed
into one 64-bit word, so callers must route larger inputs to the Python
module (``kernels`` does this).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from ._budget import BudgetExhausted

cdef enum:
    WORD = 64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int pc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef class _Embed:
    cdef int n, npat
    cdef uint64_t *hrows
    cdef uint64_t *prows
    cdef uint64_t *dom      # (npat + 1) levels of npat domains
    cdef int *mapping
    cdef long long nodes, limit
    cdef bint exhausted

    def __cinit__(self, int n, int npat):
        self.n = n
        self.npat = npat
        self.hrows = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
        self.prows = <uint64_t *> malloc(max(npat, 1) * sizeof(uint64_t))
        self.dom = <uint64_t *> malloc(max(npat + 1, 1) * max(npat, 1) * sizeof(uint64_t))
        self.mapping = <int *> malloc(max(npat, 1) * sizeof(int))
        if not (self.hrows and self.prows and self.dom and self.mapping):
            raise MemoryError()

    def __dealloc__(self):
        free(self.hrows)
        free(self.prows)
        free(self.dom)
        free(self.mapping)

    cdef bint rec(self, int level, int left) nogil:
        cdef int npat = self.npat
        cdef uint64_t *cur = self.dom + level * npat
        cdef uint64_t *nxt = cur + npat
        cdef int p, q, best, best_size, size, c
        cdef uint64_t cands, low, hrow, prow, d
        cdef bint ok
        self.nodes += 1
        if self.limit and self.nodes > self.limit:
            self.exhausted = True
            return False
        if left == 0:
            return True
        best = -1
        best_size = 1 << 30
        for p in range(npat):
            if self.mapping[p] < 0:
                size = pc(cur[p])
                if size < best_size:
                    best = p
                    best_size = size
        p = best
        prow = self.prows[p]
        cands = cur[p]
        while cands:
            low = cands & (~cands + 1)
            cands ^= low
            c = ctz(low)
            hrow = self.hrows[c]
            ok = True
            for q in range(npat):
                if self.mapping[q] >= 0 or q == p:
                    continue
                d = cur[q] & ~low
                if (prow >> q) & 1:
                    d &= hrow
                if not d:
                    ok = False
                    break
                nxt[q] = d
            if not ok:
                continue
            self.mapping[p] = c
            if self.rec(level + 1, left - 1):
                return True
            if self.exhausted:
                return False
            self.mapping[p] = -1
        return False


def subgraph_embed(hrows, prows, long long node_limit=0):
    cdef int nh = len(hrows), npat = len(prows)
    cdef int p, h
    cdef uint64_t d
    if nh > WORD:
        raise ValueError("compiled kernels handle at most 64 vertices")
    if npat > nh:
        return None, 0
    if npat == 0:
        return [], 0
    cdef _Embed e = _Embed(nh, npat)
    for h in range(nh):
        e.hrows[h] = hrows[h]
    for p in range(npat):
        e.prows[p] = prows[p]
        e.mapping[p] = -1
    for p in range(npat):
        d = 0
        for h in range(nh):
            if pc(e.hrows[h]) >= pc(e.prows[p]):
                d |= (<uint64_t> 1) << h
        if not d:
            return None, 0
        e.dom[p] = d
    e.limit = node_limit
    found = e.rec(0, npat)
    if e.exhausted:
        raise BudgetExhausted(e.nodes, "subgraph search budget exhausted")
    if found:
        return [e.mapping[p] for p in range(npat)], e.nodes
    return None, e.nodes


def quotient_rows(hrows, parts):
    cdef int k = len(parts), n = len(hrows), i, j
    cdef uint64_t x, low, r
    if n > WORD:
        raise ValueError("compiled kernels handle at most 64 vertices")
    cdef uint64_t *hr = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    cdef uint64_t *pr = <uint64_t *> malloc(max(k, 1) * sizeof(uint64_t))
    cdef uint64_t *reach = <uint64_t *> malloc(max(k, 1) * sizeof(uint64_t))
    cdef uint64_t *rows = <uint64_t *> malloc(max(k, 1) * sizeof(uint64_t))
    try:
        for i in range(n):
            hr[i] = hrows[i]
        for i in range(k):
            pr[i] = parts[i]
            r = 0
            x = pr[i]
            while x:
                low = x & (~x + 1)
                r |= hr[ctz(low)]
                x ^= low
            reach[i] = r
            rows[i] = 0
        for i in range(k):
            for j in range(i + 1, k):
                if reach[i] & pr[j]:
                    rows[i] |= (<uint64_t> 1) << j
                    rows[j] |= (<uint64_t> 1) << i
        return [rows[i] for i in range(k)]
    finally:
        free(hr)
        free(pr)
        free(reach)
        free(rows)


cdef class _Spanning:
    cdef int n, nauto
    cdef uint64_t *qrows
    cdef uint64_t *prows
    cdef uint64_t *dom       # (n + 1) levels of n domains
    cdef int *image
    cdef int *autos          # nauto rows of n images
    cdef int *group          # (n + 1) levels of up to nauto automorphism indices
    cdef int *group_size
    cdef long long nodes, limit
    cdef bint exhausted

    def __cinit__(self, int n, int nauto):
        self.n = n
        self.nauto = nauto
        self.qrows = <uint64_t *> malloc(n * sizeof(uint64_t))
        self.prows = <uint64_t *> malloc(n * sizeof(uint64_t))
        self.dom = <uint64_t *> malloc((n + 1) * n * sizeof(uint64_t))
        self.image = <int *> malloc(n * sizeof(int))
        self.autos = <int *> malloc(max(nauto, 1) * n * sizeof(int))
        self.group = <int *> malloc((n + 1) * max(nauto, 1) * sizeof(int))
        self.group_size = <int *> malloc((n + 1) * sizeof(int))
        if not (self.qrows and self.prows and self.dom and self.image
                and self.autos and self.group and self.group_size):
            raise MemoryError()

    def __dealloc__(self):
        free(self.qrows)
        free(self.prows)
        free(self.dom)
        free(self.image)
        free(self.autos)
        free(self.group)
        free(self.group_size)

    cdef bint rec(self, int level, int left) nogil:
        cdef int n = self.n, nauto = self.nauto
        cdef uint64_t *cur = self.dom + level * n
        cdef uint64_t *nxt = cur + n
        cdef int *grp = self.group + level * nauto
        cdef int *sub = grp + nauto
        cdef int gsize = self.group_size[level]
        cdef int h, x, p, best, best_size, size, a, s
        cdef uint64_t cands, low, qrow, forbid, d, covered
        cdef bint ok
        self.nodes += 1
        if self.limit and self.nodes > self.limit:
            self.exhausted = True
            return False
        if left == 0:
            return True
        best = -1
        best_size = 1 << 30
        for h in range(n):
            if self.image[h] < 0:
                size = pc(cur[h])
                if size < best_size:
                    best = h
                    best_size = size
        h = best
        qrow = self.qrows[h]
        cands = cur[h]
        covered = 0
        while cands:
            low = cands & (~cands + 1)
            cands ^= low
            p = ctz(low)
            if (covered >> p) & 1:
                continue
            for a in range(gsize):
                covered |= (<uint64_t> 1) << self.autos[grp[a] * n + p]
            covered |= low
            forbid = self.prows[p]
            ok = True
            for x in range(n):
                if self.image[x] >= 0 or x == h:
                    continue
                d = cur[x] & ~low
                if not (qrow >> x) & 1:
                    d &= ~forbid
                if not d:
                    ok = False
                    break
                nxt[x] = d
            if not ok:
                continue
            self.image[h] = p
            s = 0
            for a in range(gsize):
                if self.autos[grp[a] * n + p] == p:
                    sub[s] = grp[a]
                    s += 1
            self.group_size[level + 1] = s
            if self.rec(level + 1, left - 1):
                return True
            if self.exhausted:
                return False
            self.image[h] = -1
        return False


def spanning_embed(qrows, prows, autos, long long node_limit=0):
    cdef int n = len(qrows), nauto = len(autos)
    cdef int h, p, a
    cdef uint64_t d
    if len(prows) != n:
        raise ValueError("spanning_embed needs equal orders")
    if n > WORD:
        raise ValueError("compiled kernels handle at most 64 vertices")
    if n == 0:
        return [], 0
    cdef _Spanning s = _Spanning(n, nauto)
    for h in range(n):
        s.qrows[h] = qrows[h]
        s.prows[h] = prows[h]
        s.image[h] = -1
    for a in range(nauto):
        row = autos[a]
        for p in range(n):
            s.autos[a * n + p] = row[p]
        s.group[a] = a
    s.group_size[0] = nauto
    for h in range(n):
        d = 0
        for p in range(n):
            if pc(s.prows[p]) <= pc(s.qrows[h]):
                d |= (<uint64_t> 1) << p
        if not d:
            return None, 0
        s.dom[h] = d
    s.limit = node_limit
    found = s.rec(0, n)
    if s.exhausted:
        raise BudgetExhausted(s.nodes, "subgraph search budget exhausted")
    if not found:
        return None, s.nodes
    inverse = [0] * n
    for h in range(n):
        inverse[s.image[h]] = h
    return inverse, s.nodes


def partition_key(parts, uint64_t singles, classes):
    cdef int nc = len(classes), i, k
    cdef uint64_t p, r, x, low
    cdef uint64_t cls[WORD]
    if nc > WORD:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(nc):
        cls[i] = classes[i]
    out = []
    for part in parts:
        p = part
        r = p & singles
        for i in range(nc):
            k = pc(p & cls[i])
            x = cls[i]
            while k:
                low = x & (~x + 1)
                r |= low
                x ^= low
                k -= 1
        out.append(r)
    out.sort()
    return tuple(out)
