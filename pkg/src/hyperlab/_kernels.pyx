# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive kernels; same contracts as ``_kernels_py``.

Arrays are int64 buffers; hyperoperation outputs are bitmasks, so the
carrier size is limited to 62 elements.
"""

import numpy as np

IMPLEMENTATION = "cython"


cdef inline long long _idx(long long[:] d, int start, int count, long long size):
    cdef long long idx = 0
    cdef int k
    for k in range(start, start + count):
        idx = idx * size + d[k]
    return idx


cdef inline void _decode(long long idx, long long size, long long[:] d, int width):
    cdef int k
    for k in range(width - 1, -1, -1):
        d[k] = idx % size
        idx //= size


def hyper_assoc_violation(long long[:] ftab, long long size, int m):
    cdef int width = 2 * m - 1
    cdef long long total = size ** width
    cdef long long[:] d = np.zeros(width, dtype=np.int64)
    cdef long long[:] scratch = np.zeros(m, dtype=np.int64)
    cdef long long idx, inner, out, first, oidx
    cdef int p, k, x
    for idx in range(total):
        _decode(idx, size, d, width)
        first = 0
        for p in range(m):
            inner = ftab[_idx(d, p, m, size)]
            out = 0
            x = 0
            while inner:
                if inner & 1:
                    oidx = 0
                    for k in range(p):
                        oidx = oidx * size + d[k]
                    oidx = oidx * size + x
                    for k in range(p + m, width):
                        oidx = oidx * size + d[k]
                    out |= ftab[oidx]
                inner >>= 1
                x += 1
            if p == 0:
                first = out
            elif out != first:
                return idx, 0, p
    return None


def nary_assoc_violation(long long[:] gtab, long long size, int n):
    cdef int width = 2 * n - 1
    cdef long long total = size ** width
    cdef long long[:] d = np.zeros(width, dtype=np.int64)
    cdef long long idx, inner, out, first, oidx
    cdef int p, k
    for idx in range(total):
        _decode(idx, size, d, width)
        first = 0
        for p in range(n):
            inner = gtab[_idx(d, p, n, size)]
            oidx = 0
            for k in range(p):
                oidx = oidx * size + d[k]
            oidx = oidx * size + inner
            for k in range(p + n, width):
                oidx = oidx * size + d[k]
            out = gtab[oidx]
            if p == 0:
                first = out
            elif out != first:
                return idx, 0, p
    return None


cdef inline long long _g_with(long long[:] gtab, long long[:] xs, int slot, long long c,
                              int n, long long size):
    cdef long long idx = 0
    cdef int k
    for k in range(slot):
        idx = idx * size + xs[k]
    idx = idx * size + c
    for k in range(slot, n - 1):
        idx = idx * size + xs[k]
    return gtab[idx]


def distributivity_violation(long long[:] ftab, long long[:] gtab, long long size,
                             int m, int n):
    cdef long long xtotal = size ** (n - 1)
    cdef long long atotal = size ** m
    cdef long long[:] xs = np.zeros(max(n - 1, 1), dtype=np.int64)
    cdef long long[:] a = np.zeros(m, dtype=np.int64)
    cdef long long xi, ai, lhs, mask, ridx
    cdef int slot, k, c
    for slot in range(n):
        for xi in range(xtotal):
            _decode(xi, size, xs, n - 1)
            for ai in range(atotal):
                _decode(ai, size, a, m)
                lhs = 0
                mask = ftab[ai]
                c = 0
                while mask:
                    if mask & 1:
                        lhs |= (<long long>1) << _g_with(gtab, xs, slot, c, n, size)
                    mask >>= 1
                    c += 1
                ridx = 0
                for k in range(m):
                    ridx = ridx * size + _g_with(gtab, xs, slot, a[k], n, size)
                if ftab[ridx] != lhs:
                    return slot, xi, ai
    return None


def sum_violation(long long[:] ftab, long long size, int m, long long[:] lo, long long[:] hi,
                  long long cap_lo, long long cap_hi, long long floor_lo, long long floor_hi):
    cdef long long total = size ** m
    cdef long long[:] a = np.zeros(m, dtype=np.int64)
    cdef long long idx, left_lo, left_hi, mask, r_lo, r_hi
    cdef int k, c
    for idx in range(total):
        _decode(idx, size, a, m)
        left_lo = cap_lo
        left_hi = cap_hi
        for k in range(m):
            if lo[a[k]] < left_lo:
                left_lo = lo[a[k]]
            if hi[a[k]] < left_hi:
                left_hi = hi[a[k]]
        mask = ftab[idx]
        c = 0
        while mask:
            if mask & 1:
                r_lo = lo[c] if lo[c] > floor_lo else floor_lo
                r_hi = hi[c] if hi[c] > floor_hi else floor_hi
                if left_lo > r_lo or left_hi > r_hi:
                    return idx, c
            mask >>= 1
            c += 1
    return None


def product_violation(long long[:] gtab, long long size, int n, long long[:] lo, long long[:] hi,
                      long long join_lo, long long join_hi, long long cap_lo, long long cap_hi,
                      long long floor_lo, long long floor_hi):
    cdef long long total = size ** n
    cdef long long[:] b = np.zeros(n, dtype=np.int64)
    cdef long long idx, left_lo, left_hi, r_lo, r_hi, c
    cdef int k
    for idx in range(total):
        _decode(idx, size, b, n)
        left_lo = join_lo
        left_hi = join_hi
        for k in range(n):
            if lo[b[k]] > left_lo:
                left_lo = lo[b[k]]
            if hi[b[k]] > left_hi:
                left_hi = hi[b[k]]
        if cap_lo < left_lo:
            left_lo = cap_lo
        if cap_hi < left_hi:
            left_hi = cap_hi
        c = gtab[idx]
        r_lo = lo[c] if lo[c] > floor_lo else floor_lo
        r_hi = hi[c] if hi[c] > floor_hi else floor_hi
        if left_lo > r_lo or left_hi > r_hi:
            return idx
    return None
