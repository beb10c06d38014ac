# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-DP kernels; see _pure.py for the recurrences.

Results must agree exactly with the pure-Python kernels; the test suite
cross-checks the two backends.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(u64) nogil
    int __builtin_ctzll(u64) nogil

MAX_KERNEL_VERTICES = 25


cdef inline u64 _lowbit(u64 x) nogil:
    return x & (~x + 1)


def _as_masks(masks):
    n = len(masks)
    if n > MAX_KERNEL_VERTICES:
        raise ValueError(f"kernels support at most {MAX_KERNEL_VERTICES} vertices")
    return np.asarray(masks, dtype=np.uint64)


def treewidth_table(masks):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] adj = _as_masks(masks)
    cdef int n = adj.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] table = np.zeros(1 << n, dtype=np.int32)
    cdef u64 s, rest, low, t, bit, comp, reach, frontier, grown, fl
    cdef int v, q, best, cand, prev
    cdef u64 size = (<u64>1) << n
    for s in range(1, size):
        best = 0x40000000
        rest = s
        while rest:
            low = _lowbit(rest)
            rest ^= low
            v = __builtin_ctzll(low)
            t = s ^ low
            bit = low
            comp = bit
            reach = adj[v]
            frontier = adj[v] & t
            while frontier:
                comp |= frontier
                grown = 0
                while frontier:
                    fl = _lowbit(frontier)
                    frontier ^= fl
                    grown |= adj[__builtin_ctzll(fl)]
                reach |= grown
                frontier = grown & t & ~comp
            q = __builtin_popcountll(reach & ~t & ~bit)
            prev = table[t]
            cand = prev if prev > q else q
            if cand < best:
                best = cand
        table[s] = best
    return table


def vertex_separation_table(masks):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] adj = _as_masks(masks)
    cdef int n = adj.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] table = np.zeros(1 << n, dtype=np.int32)
    cdef u64 s, rest, low, size = (<u64>1) << n
    cdef int border, best, prev
    for s in range(1, size):
        best = 0x40000000
        border = 0
        rest = s
        while rest:
            low = _lowbit(rest)
            rest ^= low
            if adj[__builtin_ctzll(low)] & ~s:
                border += 1
            prev = table[s ^ low]
            if prev < best:
                best = prev
        table[s] = best if best > border else border
    return table


def cutwidth_table(masks):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] adj = _as_masks(masks)
    cdef int n = adj.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] table = np.zeros(1 << n, dtype=np.int32)
    cdef u64 s, rest, low, size = (<u64>1) << n
    cdef int cross, best, prev
    for s in range(1, size):
        best = 0x40000000
        cross = 0
        rest = s
        while rest:
            low = _lowbit(rest)
            rest ^= low
            cross += __builtin_popcountll(adj[__builtin_ctzll(low)] & ~s)
            prev = table[s ^ low]
            if prev < best:
                best = prev
        table[s] = best if best > cross else cross
    return table


def path_congestion_table(masks):
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] adj = _as_masks(masks)
    cdef int n = adj.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] table = np.zeros(1 << n, dtype=np.int32)
    cdef u64 s, rest, low, size = (<u64>1) << n
    cdef int cross, best, cand, prev, u
    for s in range(1, size):
        cross = 0
        rest = s
        while rest:
            low = _lowbit(rest)
            rest ^= low
            cross += __builtin_popcountll(adj[__builtin_ctzll(low)] & ~s)
        best = 0x40000000
        rest = s
        while rest:
            low = _lowbit(rest)
            rest ^= low
            u = __builtin_ctzll(low)
            cand = cross + __builtin_popcountll(adj[u] & s)
            prev = table[s ^ low]
            if prev > cand:
                cand = prev
            if cand < best:
                best = cand
        table[s] = best
    return table
