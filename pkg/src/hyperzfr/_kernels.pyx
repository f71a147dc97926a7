# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-scan kernels. See ``_kernels_py`` for the reference versions."""

import numpy as np

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


def gray_histogram(int n, inc_ptr, inc_idx, int n_edges, int n_fixed=0, uint64_t block=0):
    cdef int64_t[::1] ptr = np.ascontiguousarray(inc_ptr, dtype=np.int64)
    cdef int64_t[::1] idx = np.ascontiguousarray(inc_idx, dtype=np.int64)
    hist_arr = np.zeros((n + 1, n_edges + 1), dtype=np.int64)
    cdef int64_t[:, ::1] hist = hist_arr
    cdef int m = n - n_fixed
    cdef int64_t *hits = <int64_t *> calloc(n_edges + 1, sizeof(int64_t))
    cdef unsigned char *member = <unsigned char *> calloc(n + 1, sizeof(unsigned char))
    if hits == NULL or member == NULL:
        free(hits)
        free(member)
        raise MemoryError()
    cdef int size = 0, e = 0, t, v
    cdef int64_t j
    cdef uint64_t i, steps = (<uint64_t> 1) << m
    cdef bint drift = False

    with nogil:
        for t in range(n_fixed):
            if (block >> t) & 1:
                v = m + t
                member[v] = 1
                size += 1
                for j in range(ptr[v], ptr[v + 1]):
                    hits[idx[j]] += 1
                    if hits[idx[j]] == 1:
                        e += 1
        hist[size, e] += 1

        i = 1
        while i < steps:
            v = __builtin_ctzll(i)
            if member[v]:
                member[v] = 0
                size -= 1
                for j in range(ptr[v], ptr[v + 1]):
                    hits[idx[j]] -= 1
                    if hits[idx[j]] == 0:
                        e -= 1
            else:
                member[v] = 1
                size += 1
                for j in range(ptr[v], ptr[v + 1]):
                    hits[idx[j]] += 1
                    if hits[idx[j]] == 1:
                        e += 1
            hist[size, e] += 1
            i += 1

        for v in range(n):
            if member[v]:
                for j in range(ptr[v], ptr[v + 1]):
                    hits[idx[j]] -= 1
                    if hits[idx[j]] == 0:
                        e -= 1
        if e != 0:
            drift = True
        for t in range(n_edges):
            if hits[t] != 0:
                drift = True

    free(hits)
    free(member)
    if drift:
        raise RuntimeError("gray-code edge bookkeeping drifted")
    return hist_arr


cdef void _walk(int v, int n, uint64_t cur, int size, const int64_t *ptr,
                const uint64_t *masks, int64_t *counts) noexcept nogil:
    cdef int64_t t
    cdef uint64_t mk
    if v == n:
        counts[size] += 1
        return
    _walk(v + 1, n, cur, size, ptr, masks, counts)
    for t in range(ptr[v], ptr[v + 1]):
        mk = masks[t]
        if (mk & cur) == mk:
            return
    _walk(v + 1, n, cur | ((<uint64_t> 1) << v), size + 1, ptr, masks, counts)


def independent_counts(int n, closer_ptr, closer_masks):
    if n > 63:
        raise ValueError("bitmask kernel supports at most 63 vertices")
    cdef int64_t[::1] ptr = np.ascontiguousarray(closer_ptr, dtype=np.int64)
    cdef uint64_t[::1] masks = np.ascontiguousarray(closer_masks, dtype=np.uint64)
    counts_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef const uint64_t *mp = &masks[0] if masks.shape[0] > 0 else NULL
    with nogil:
        _walk(0, n, 0, 0, &ptr[0], mp, &counts[0])
    return counts_arr
