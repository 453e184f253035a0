# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled equitable refinement kernel.

Semantics are defined by tokenaut._refine_py.RefineKernel; the two
backends must return identical cells and traces for identical inputs.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memmove

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static int tk_popcount64(unsigned long long x) { return (int)__popcnt64(x); }
    #else
    static int tk_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    #endif
    """
    int tk_popcount64(u64 x) nogil


cdef class RefineKernel:
    cdef public int n
    cdef int nwords
    cdef int qcap
    cdef u64 *adj          # n rows of nwords words
    cdef u64 *qmasks       # splitter queue, fixed slots, never reused
    cdef int *verts        # vertices grouped by cell
    cdef int *starts       # per-cell offset into verts
    cdef int *lens         # per-cell length
    cdef int *cnt          # per-position neighbour counts within one cell
    cdef int *scratch      # regrouping buffer
    cdef int *bucket_len   # per-count bucket sizes (size n+1)
    cdef int *bucket_off   # per-count bucket offsets (size n+1)

    @property
    def backend(self):
        return "compiled"

    def __cinit__(self, int n, adj):
        cdef int v, w
        cdef object mask
        self.n = n
        self.nwords = (n + 63) >> 6
        self.qcap = 3 * n + 8
        self.adj = <u64 *> calloc(n * self.nwords, sizeof(u64))
        self.qmasks = <u64 *> calloc(self.qcap * self.nwords, sizeof(u64))
        self.verts = <int *> calloc(n, sizeof(int))
        self.starts = <int *> calloc(n + 1, sizeof(int))
        self.lens = <int *> calloc(n + 1, sizeof(int))
        self.cnt = <int *> calloc(n, sizeof(int))
        self.scratch = <int *> calloc(n, sizeof(int))
        self.bucket_len = <int *> calloc(n + 2, sizeof(int))
        self.bucket_off = <int *> calloc(n + 2, sizeof(int))
        if (self.adj == NULL or self.qmasks == NULL or self.verts == NULL
                or self.starts == NULL or self.lens == NULL or self.cnt == NULL
                or self.scratch == NULL or self.bucket_len == NULL
                or self.bucket_off == NULL):
            raise MemoryError()
        for v in range(n):
            mask = adj[v]
            w = 0
            while mask:
                self.adj[v * self.nwords + w] = <u64> (mask & 0xFFFFFFFFFFFFFFFF)
                mask >>= 64
                w += 1

    def __dealloc__(self):
        free(self.adj)
        free(self.qmasks)
        free(self.verts)
        free(self.starts)
        free(self.lens)
        free(self.cnt)
        free(self.scratch)
        free(self.bucket_len)
        free(self.bucket_off)

    cdef void _push_mask(self, int qtail, int start, int length):
        cdef int t, v, w
        cdef u64 *slot = &self.qmasks[qtail * self.nwords]
        for w in range(self.nwords):
            slot[w] = 0
        for t in range(length):
            v = self.verts[start + t]
            slot[v >> 6] |= (<u64> 1) << (v & 63)

    def refine(self, cells, active):
        cdef int n = self.n
        cdef int nwords = self.nwords
        cdef int m = len(cells)
        cdef int qhead = 0, qtail = 0
        cdef int i, j, t, v, w, c, pos, L, s, nf, cmin, cmax, off, jj
        cdef u64 *splitter
        if m > n:
            raise ValueError("more cells than vertices")
        pos = 0
        for i in range(m):
            cell = cells[i]
            self.starts[i] = pos
            self.lens[i] = len(cell)
            for v in cell:
                if pos >= n:
                    raise ValueError("partition covers more than n vertices")
                self.verts[pos] = v
                pos += 1
        if pos != n:
            raise ValueError("partition must cover all n vertices")
        for i in active:
            if qtail >= self.qcap:
                raise RuntimeError("splitter queue overflow")
            self._push_mask(qtail, self.starts[i], self.lens[i])
            qtail += 1
        trace = []
        while qhead < qtail:
            if m == n:
                break
            splitter = &self.qmasks[qhead * nwords]
            qhead += 1
            j = 0
            while j < m:
                L = self.lens[j]
                if L > 1:
                    s = self.starts[j]
                    cmin = n + 1
                    cmax = -1
                    for t in range(L):
                        v = self.verts[s + t]
                        c = 0
                        for w in range(nwords):
                            c += tk_popcount64(self.adj[v * nwords + w] & splitter[w])
                        self.cnt[t] = c
                        if c < cmin:
                            cmin = c
                        if c > cmax:
                            cmax = c
                    if cmin != cmax:
                        for c in range(cmin, cmax + 1):
                            self.bucket_len[c] = 0
                        for t in range(L):
                            self.bucket_len[self.cnt[t]] += 1
                        nf = 0
                        off = 0
                        for c in range(cmin, cmax + 1):
                            if self.bucket_len[c] > 0:
                                self.bucket_off[c] = off
                                off += self.bucket_len[c]
                                nf += 1
                        for t in range(L):
                            c = self.cnt[t]
                            self.scratch[self.bucket_off[c]] = self.verts[s + t]
                            self.bucket_off[c] += 1
                        memcpy(&self.verts[s], self.scratch, L * sizeof(int))
                        memmove(&self.starts[j + nf], &self.starts[j + 1],
                                (m - (j + 1)) * sizeof(int))
                        memmove(&self.lens[j + nf], &self.lens[j + 1],
                                (m - (j + 1)) * sizeof(int))
                        trace.append(j)
                        trace.append(nf)
                        off = s
                        jj = j
                        for c in range(cmin, cmax + 1):
                            if self.bucket_len[c] > 0:
                                self.starts[jj] = off
                                self.lens[jj] = self.bucket_len[c]
                                trace.append(c)
                                trace.append(self.bucket_len[c])
                                if qtail >= self.qcap:
                                    raise RuntimeError("splitter queue overflow")
                                self._push_mask(qtail, off, self.bucket_len[c])
                                qtail += 1
                                off += self.bucket_len[c]
                                jj += 1
                        m += nf - 1
                        j += nf - 1
                j += 1
            trace.append(-1)
        trace.append(-2)
        out = []
        for i in range(m):
            trace.append(self.lens[i])
            s = self.starts[i]
            out.append([self.verts[s + t] for t in range(self.lens[i])])
        return out, tuple(trace)
