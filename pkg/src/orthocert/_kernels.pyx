# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: pair scans, seeded sampling, GF(2) rank, clique search.

Must stay semantically identical to orthocert._kernels_py (same first pair,
same draw sequence, same clique witness); tests compare the two backends.
"""

from libc.stdint cimport int64_t, uint64_t

import numpy as np

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static inline int oc_popcount64(unsigned long long x) { return (int)__popcnt64(x); }
    static inline int oc_ctz64(unsigned long long x) { unsigned long i; _BitScanForward64(&i, x); return (int)i; }
    #else
    static inline int oc_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int oc_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    #endif
    """
    int oc_popcount64(uint64_t x) nogil
    int oc_ctz64(uint64_t x) nogil

cdef uint64_t PHI = 0x9E3779B97F4A7C15U
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9U
cdef uint64_t MIX2 = 0x94D049BB133111EBU


cdef inline uint64_t splitmix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


def pair_scan(masks, int target):
    """First pair (i, j), i < j, at XOR-popcount == target; None if absent."""
    arr = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef const uint64_t[::1] mv = arr
    cdef Py_ssize_t n = mv.shape[0]
    cdef Py_ssize_t i, j, fi = -1, fj = -1
    cdef uint64_t x
    with nogil:
        for i in range(n - 1):
            x = mv[i]
            for j in range(i + 1, n):
                if oc_popcount64(x ^ mv[j]) == target:
                    fi = i
                    fj = j
                    break
            if fi >= 0:
                break
    if fi >= 0:
        return int(fi), int(fj)
    return None


def distance_counts(masks):
    """Counts of unordered pairwise Hamming distances, indexed 0..64."""
    arr = np.ascontiguousarray(masks, dtype=np.uint64)
    out = np.zeros(65, dtype=np.int64)
    cdef const uint64_t[::1] mv = arr
    cdef int64_t[::1] cv = out
    cdef Py_ssize_t n = mv.shape[0]
    cdef Py_ssize_t i, j
    cdef uint64_t x
    with nogil:
        for i in range(n - 1):
            x = mv[i]
            for j in range(i + 1, n):
                cv[oc_popcount64(x ^ mv[j])] += 1
    return out


def sampled_scan(masks, int target, long long trials, seed):
    """Deterministic seeded pair sampling; first violating (trial, i, j) or None.

    Trial t uses stateless splitmix64 draws 2t+1 and 2t+2: the first picks i,
    the second picks j over the remaining indices (no rejection loop).
    """
    arr = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef const uint64_t[::1] mv = arr
    cdef uint64_t n = <uint64_t> mv.shape[0]
    if n < 2 or trials < 1:
        return None
    cdef uint64_t s = <uint64_t> (int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef long long t, ft = -1
    cdef uint64_t a, b, i = 0, j = 0, fi = 0, fj = 0
    with nogil:
        for t in range(trials):
            a = splitmix64(s + (<uint64_t> (2 * t + 1)) * PHI)
            b = splitmix64(s + (<uint64_t> (2 * t + 2)) * PHI)
            i = a % n
            j = b % (n - 1)
            if j >= i:
                j += 1
            if oc_popcount64(mv[i] ^ mv[j]) == target:
                ft = t
                fi = i
                fj = j
                break
    if ft >= 0:
        return int(ft), int(fi), int(fj)
    return None


cdef void _pack_rows(object rows, int ncols, int nwords, uint64_t[:, ::1] out):
    # explicit shifts rather than to_bytes: endian-independent bit placement
    cdef Py_ssize_t r
    cdef int w
    cdef object val
    for r in range(len(rows)):
        val = rows[r]
        if val < 0 or val >> ncols:
            raise ValueError("row has bits outside the declared column range")
        for w in range(nwords):
            out[r, w] = <uint64_t> (val & 0xFFFFFFFFFFFFFFFF)
            val >>= 64


def gf2_rank(rows, int ncols):
    """Rank over GF(2) of rows given as packed Python ints (bit b = column b)."""
    cdef Py_ssize_t n = len(rows)
    if n == 0 or ncols == 0:
        for row in rows:
            if row < 0 or row >> ncols:
                raise ValueError("row has bits outside the declared column range")
        return 0
    cdef int nwords = (ncols + 63) // 64
    mat_np = np.zeros((n, nwords), dtype=np.uint64)
    cdef uint64_t[:, ::1] mat = mat_np
    _pack_rows(rows, ncols, nwords, mat)
    piv_np = np.full(ncols, -1, dtype=np.int64)
    cdef int64_t[::1] piv = piv_np
    cdef Py_ssize_t r, p
    cdef int w, bit, rank = 0
    with nogil:
        for r in range(n):
            while True:
                bit = -1
                for w in range(nwords):
                    if mat[r, w]:
                        bit = w * 64 + oc_ctz64(mat[r, w])
                        break
                if bit < 0:
                    break
                p = piv[bit]
                if p < 0:
                    piv[bit] = r
                    rank += 1
                    break
                for w in range(nwords):
                    mat[r, w] ^= mat[p, w]
    return rank


cdef class _CliqueSearch:
    cdef uint64_t[:, ::1] adj
    cdef uint64_t[:, ::1] cand      # candidate set per depth
    cdef uint64_t[:, ::1] qbuf      # colouring scratch per depth
    cdef uint64_t[:, ::1] qcbuf
    cdef int[:, ::1] order
    cdef int[:, ::1] colors
    cdef int[::1] rstack
    cdef int[::1] best
    cdef int n, nwords, best_size, best_len

    cdef void expand(self, int rsize, int depth) noexcept nogil:
        cdef int w, cnt, color, v, idx, word, nwords = self.nwords
        cdef uint64_t low
        cdef bint empty = True
        for w in range(nwords):
            if self.cand[depth, w]:
                empty = False
                break
        if empty:
            if rsize > self.best_size:
                self.best_size = rsize
                self.best_len = rsize
                for w in range(rsize):
                    self.best[w] = self.rstack[w]
            return
        # greedy colouring of the candidates, lowest index first
        cnt = 0
        color = 0
        for w in range(nwords):
            self.qbuf[depth, w] = self.cand[depth, w]
        while True:
            empty = True
            for w in range(nwords):
                if self.qbuf[depth, w]:
                    empty = False
                    break
            if empty:
                break
            color += 1
            for w in range(nwords):
                self.qcbuf[depth, w] = self.qbuf[depth, w]
            while True:
                v = -1
                for w in range(nwords):
                    if self.qcbuf[depth, w]:
                        v = w * 64 + oc_ctz64(self.qcbuf[depth, w])
                        break
                if v < 0:
                    break
                self.order[depth, cnt] = v
                self.colors[depth, cnt] = color
                cnt += 1
                word = v >> 6
                low = (<uint64_t> 1) << (v & 63)
                self.qbuf[depth, word] ^= low
                self.qcbuf[depth, word] ^= low
                for w in range(nwords):
                    self.qcbuf[depth, w] &= ~self.adj[v, w]
        # branch in decreasing colour order; cand[depth] doubles as P
        for idx in range(cnt - 1, -1, -1):
            if rsize + self.colors[depth, idx] <= self.best_size:
                return
            v = self.order[depth, idx]
            for w in range(nwords):
                self.cand[depth + 1, w] = self.cand[depth, w] & self.adj[v, w]
            self.rstack[rsize] = v
            self.expand(rsize + 1, depth + 1)
            word = v >> 6
            self.cand[depth, word] ^= (<uint64_t> 1) << (v & 63)


def max_clique(adj, int n):
    """Maximum clique by branch and bound with a greedy colouring bound.

    Same search order and witness as the portable backend: candidates are
    coloured lowest index first, branches explored in decreasing colour order.
    """
    if n == 0:
        return 0, []
    cdef int nwords = (n + 63) // 64
    cdef _CliqueSearch s = _CliqueSearch()
    adj_np = np.zeros((n, nwords), dtype=np.uint64)
    cdef uint64_t[:, ::1] am = adj_np
    _pack_rows(adj, n, nwords, am)
    s.adj = am
    cand_np = np.zeros((n + 1, nwords), dtype=np.uint64)
    qbuf_np = np.zeros((n + 1, nwords), dtype=np.uint64)
    qcbuf_np = np.zeros((n + 1, nwords), dtype=np.uint64)
    order_np = np.zeros((n + 1, n), dtype=np.int32)
    colors_np = np.zeros((n + 1, n), dtype=np.int32)
    rstack_np = np.zeros(n, dtype=np.int32)
    best_np = np.zeros(n, dtype=np.int32)
    s.cand = cand_np
    s.qbuf = qbuf_np
    s.qcbuf = qcbuf_np
    s.order = order_np
    s.colors = colors_np
    s.rstack = rstack_np
    s.best = best_np
    s.n = n
    s.nwords = nwords
    s.best_size = 0
    s.best_len = 0
    cdef int v
    for v in range(n):
        s.cand[0, v >> 6] |= (<uint64_t> 1) << (v & 63)
    with nogil:
        s.expand(0, 0)
    members = sorted(int(best_np[w]) for w in range(s.best_len))
    return s.best_size, members
