# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernels; same API and same search order as ``_pure``."""

from libc.stdint cimport uint64_t, uint32_t
from libc.stdlib cimport malloc, calloc, free

BACKEND = "cython"
MAX_N = 64
MAX_COLORS = 64
MAX_HAM_N = 24


cdef inline uint64_t bit(int i) noexcept nogil:
    return (<uint64_t>1) << i


cdef inline int lowbit_index(uint64_t x) noexcept nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef class KernelGraph:
    cdef public int n, m
    cdef int* off
    cdef int* tgt
    cdef int* eid
    cdef int* col
    cdef uint64_t* nbr
    cdef uint64_t termset
    cdef int targets[3]
    cdef int ntargets
    cdef int center
    cdef int arm_len[3]
    cdef int arm[3][65]
    cdef int hint[3]
    cdef bint has_hint
    cdef long long checked
    cdef int t_pal
    cdef bint exact_pal

    def __cinit__(self, int n, edges):
        cdef int i, u, v, m
        if n > MAX_N:
            raise ValueError(f"compiled kernel supports n <= {MAX_N}")
        edges = list(edges)
        m = len(edges)
        self.n = n
        self.m = m
        self.off = <int*>calloc(n + 1, sizeof(int))
        self.tgt = <int*>malloc((2 * m + 1) * sizeof(int))
        self.eid = <int*>malloc((2 * m + 1) * sizeof(int))
        self.col = <int*>calloc(m + 1, sizeof(int))
        self.nbr = <uint64_t*>calloc(n + 1, sizeof(uint64_t))
        if not (self.off and self.tgt and self.eid and self.col and self.nbr):
            raise MemoryError()
        adj = [[] for _ in range(n)]
        for i in range(m):
            u, v = edges[i]
            adj[u].append((v, i))
            adj[v].append((u, i))
        cdef int pos = 0
        for u in range(n):
            self.off[u] = pos
            for v, i in sorted(adj[u]):
                self.tgt[pos] = v
                self.eid[pos] = i
                self.nbr[u] |= bit(v)
                pos += 1
        self.off[n] = pos

    def __dealloc__(self):
        free(self.off)
        free(self.tgt)
        free(self.eid)
        free(self.col)
        free(self.nbr)

    cdef int _load(self, colors) except -1:
        cdef int i, c
        if len(colors) != self.m:
            raise ValueError("coloring length does not match edge count")
        for i in range(self.m):
            c = colors[i]
            if c < 0 or c >= MAX_COLORS:
                raise ValueError(f"compiled kernel needs dense color ids < {MAX_COLORS}")
            self.col[i] = c
        return 0

    # -- proper S-trees ---------------------------------------------------

    cdef bint _place(self, int k, uint64_t used, uint64_t ccols) noexcept:
        cdef int x, target, i, y, c
        if k == self.ntargets:
            return True
        x = self.center
        target = self.targets[k]
        self.arm[k][0] = x
        self.arm_len[k] = 1
        for i in range(self.off[x], self.off[x + 1]):
            y = self.tgt[i]
            c = self.col[self.eid[i]]
            if (ccols >> c) & 1 or (used >> y) & 1:
                continue
            self.arm[k][1] = y
            self.arm_len[k] = 2
            if y == target:
                if self._place(k + 1, used | bit(y), ccols | bit(c)):
                    return True
            elif not ((self.termset >> y) & 1):
                if self._grow(k, y, c, used | bit(y), ccols | bit(c), 2):
                    return True
        return False

    cdef bint _grow(self, int k, int v, int last, uint64_t used, uint64_t ccols,
                    int depth) noexcept:
        cdef int target = self.targets[k]
        cdef int i, y, c
        for i in range(self.off[v], self.off[v + 1]):
            y = self.tgt[i]
            c = self.col[self.eid[i]]
            if c == last or (used >> y) & 1:
                continue
            self.arm[k][depth] = y
            self.arm_len[k] = depth + 1
            if y == target:
                if self._place(k + 1, used | bit(y), ccols):
                    return True
            elif not ((self.termset >> y) & 1):
                if self._grow(k, y, c, used | bit(y), ccols, depth + 1):
                    return True
        return False

    cdef bint _try_center(self, int x, int* terms, int nt) noexcept:
        cdef int j, i, k = 0
        cdef uint64_t seen = 0
        for j in range(nt):
            if terms[j] != x:
                self.targets[k] = terms[j]
                k += 1
        self.ntargets = k
        if self.off[x + 1] - self.off[x] < k:
            return False
        if k > 1:
            for i in range(self.off[x], self.off[x + 1]):
                seen |= bit(self.col[self.eid[i]])
            j = 0
            while seen:
                seen &= seen - 1
                j += 1
            if j < k:
                return False
        self.center = x
        return self._place(0, bit(x), 0)

    cdef bint _spider(self, int* terms, int nt) noexcept:
        cdef int j, x
        self.termset = 0
        for j in range(nt):
            self.termset |= bit(terms[j])
        if nt == 2:
            return self._try_center(terms[0], terms, nt)
        for j in range(nt):
            if self._try_center(terms[j], terms, nt):
                return True
        for x in range(self.n):
            if (self.termset >> x) & 1:
                continue
            if self._try_center(x, terms, nt):
                return True
        return False

    def tree_exists(self, colors, terms):
        cdef int t[3]
        cdef int nt = len(terms), j
        self._load(colors)
        for j in range(nt):
            t[j] = terms[j]
        return bool(self._spider(t, nt))

    def tree_witness(self, colors, terms):
        cdef int t[3]
        cdef int nt = len(terms), j, k
        self._load(colors)
        for j in range(nt):
            t[j] = terms[j]
        if not self._spider(t, nt):
            return None
        return [[self.arm[k][j] for j in range(self.arm_len[k])] for k in range(self.ntargets)]

    # -- triples ----------------------------------------------------------

    cdef bint _first_fail(self, int* out) noexcept:
        cdef int a, b, c
        cdef int t[3]
        if self.has_hint:
            if not self._spider(self.hint, 3):
                out[0] = self.hint[0]; out[1] = self.hint[1]; out[2] = self.hint[2]
                return True
        for a in range(self.n):
            for b in range(a + 1, self.n):
                for c in range(b + 1, self.n):
                    if (self.has_hint and a == self.hint[0] and b == self.hint[1]
                            and c == self.hint[2]):
                        continue
                    t[0] = a; t[1] = b; t[2] = c
                    if not self._spider(t, 3):
                        out[0] = a; out[1] = b; out[2] = c
                        return True
        return False

    def first_failing_triple(self, colors, hint=None):
        cdef int out[3]
        self._load(colors)
        if hint is not None:
            self.hint[0], self.hint[1], self.hint[2] = hint
            self.has_hint = True
        else:
            self.has_hint = False
        if self._first_fail(out):
            return (out[0], out[1], out[2])
        return None

    # -- canonical coloring enumeration ------------------------------------

    cdef bint _rg(self, int i, int cmax) noexcept:
        cdef int c, top
        cdef int out[3]
        if self.exact_pal and (self.t_pal - 1 - cmax) > (self.m - i):
            return False
        if i == self.m:
            if self.exact_pal and cmax != self.t_pal - 1:
                return False
            self.checked += 1
            if self._first_fail(out):
                self.hint[0] = out[0]; self.hint[1] = out[1]; self.hint[2] = out[2]
                self.has_hint = True
                return False
            return True
        top = cmax + 2
        if top > self.t_pal:
            top = self.t_pal
        for c in range(top):
            self.col[i] = c
            if self._rg(i + 1, cmax if cmax > c else c):
                return True
        return False

    def search_palette(self, int t, bint exact):
        """See ``_pure.KernelGraph.search_palette``."""
        cdef int i
        if self.m == 0:
            return None, 0
        if t > MAX_COLORS:
            raise ValueError(f"compiled kernel supports t <= {MAX_COLORS}")
        self.t_pal = t
        self.exact_pal = exact
        self.checked = 0
        self.has_hint = False
        self.col[0] = 0
        if self._rg(1, 0):
            return [self.col[i] for i in range(self.m)], self.checked
        return None, self.checked

    # -- Hamiltonian paths -------------------------------------------------

    def hamiltonian_path(self):
        cdef int n = self.n
        cdef uint32_t full, mask, e, cand, lb, prev
        cdef uint32_t* ends
        cdef int v, u
        if n == 0:
            return None
        if n == 1:
            return [0]
        if n > MAX_HAM_N:
            raise ValueError(f"compiled Hamiltonian DP supports n <= {MAX_HAM_N}")
        full = (<uint32_t>1 << n) - 1
        ends = <uint32_t*>calloc(<size_t>full + 1, sizeof(uint32_t))
        if not ends:
            raise MemoryError()
        try:
            with nogil:
                for v in range(n):
                    ends[<uint32_t>1 << v] = <uint32_t>1 << v
                for mask in range(1, full + 1):
                    e = ends[mask]
                    while e:
                        v = lowbit_index(e)
                        e &= e - 1
                        cand = <uint32_t>self.nbr[v] & ~mask
                        while cand:
                            lb = cand & (~cand + 1)
                            cand ^= lb
                            ends[mask | lb] |= lb
            if not ends[full]:
                return None
            v = lowbit_index(ends[full])
            path = [v]
            mask = full
            while mask != (<uint32_t>1 << v):
                prev = mask ^ (<uint32_t>1 << v)
                cand = ends[prev] & <uint32_t>self.nbr[v]
                u = lowbit_index(cand)
                path.append(u)
                mask = prev
                v = u
            path.reverse()
            return path
        finally:
            free(ends)
