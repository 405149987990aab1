# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the census sweeps.

Semantics must match ``braidzel._pure`` exactly; the test suite compares the
two backends on random inputs.
"""

import numpy as np

BACKEND = "compiled"

DEF MAX_BANDS = 64


cdef inline Py_ssize_t _first_bad_pair_c(const long long* t, Py_ssize_t k) nogil:
    cdef Py_ssize_t i, j
    for i in range(k):
        for j in range(i + 1, k):
            if t[i] + t[j] >= 0:
                return i * k + j
    return -1


cdef inline int _boundary_cycles_c(const long long* top, const unsigned char* odd,
                                   Py_ssize_t k) nogil:
    # Node layout: ((disk * k + position) << 1) | side, side 0 = L, 1 = R.
    cdef int band[4 * MAX_BANDS]
    cdef int disk[4 * MAX_BANDS]
    cdef unsigned char visited[4 * MAX_BANDS]
    cdef Py_ssize_t n = 4 * k
    cdef Py_ssize_t x, p, d, start
    cdef int a, b, cur
    cdef int cycles = 0
    cdef bint use_band

    for x in range(k):
        p = top[x] - 1
        if odd[x]:
            a = <int>((0 * k + x) << 1) | 0; b = <int>((1 * k + p) << 1) | 1
            band[a] = b; band[b] = a
            a = <int>((0 * k + x) << 1) | 1; b = <int>((1 * k + p) << 1) | 0
            band[a] = b; band[b] = a
        else:
            a = <int>((0 * k + x) << 1) | 0; b = <int>((1 * k + p) << 1) | 0
            band[a] = b; band[b] = a
            a = <int>((0 * k + x) << 1) | 1; b = <int>((1 * k + p) << 1) | 1
            band[a] = b; band[b] = a
    for d in range(2):
        for p in range(k):
            a = <int>((d * k + p) << 1) | 1
            b = <int>((d * k + ((p + 1) % k)) << 1) | 0
            disk[a] = b; disk[b] = a

    for start in range(n):
        visited[start] = 0
    for start in range(n):
        if visited[start]:
            continue
        cycles += 1
        cur = <int>start
        use_band = True
        while not visited[cur]:
            visited[cur] = 1
            cur = band[cur] if use_band else disk[cur]
            use_band = not use_band
    return cycles


def first_bad_pair(twists):
    """Index of the first pair (i < j, row-major) with t_i + t_j >= 0.

    Returns ``i * k + j`` using 0-based indices, or -1 when every pairwise
    sum is negative.
    """
    cdef long long buf[MAX_BANDS]
    cdef Py_ssize_t k = len(twists)
    cdef Py_ssize_t i
    if k > MAX_BANDS:
        raise ValueError(f"too many bands for the compiled kernel: {k}")
    for i in range(k):
        buf[i] = twists[i]
    return _first_bad_pair_c(buf, k)


def qp_all_negative_batch(long long[:, :] rows):
    """Per row: 1 if all pairwise twist sums are negative, else 0."""
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t k = rows.shape[1]
    if k > MAX_BANDS:
        raise ValueError(f"too many bands for the compiled kernel: {k}")
    out = np.empty(n, dtype=np.uint8)
    cdef unsigned char[:] o = out
    cdef Py_ssize_t r
    with nogil:
        for r in range(n):
            o[r] = 1 if _first_bad_pair_c(&rows[r, 0], k) < 0 else 0
    return out


def boundary_cycles(images, odd):
    """Boundary components of a band surface (see the pure backend docstring)."""
    cdef long long top[MAX_BANDS]
    cdef unsigned char par[MAX_BANDS]
    cdef Py_ssize_t k = len(images)
    cdef Py_ssize_t i
    if k > MAX_BANDS:
        raise ValueError(f"too many bands for the compiled kernel: {k}")
    for i in range(k):
        top[i] = images[i]
        par[i] = 1 if odd[i] else 0
    return _boundary_cycles_c(top, par, k)


def pretzel_boundary_batch(long long[:, :] rows):
    """Boundary component counts for trivially braided surfaces, per row."""
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t k = rows.shape[1]
    cdef long long top[MAX_BANDS]
    cdef unsigned char par[MAX_BANDS]
    cdef Py_ssize_t r, i
    if k > MAX_BANDS:
        raise ValueError(f"too many bands for the compiled kernel: {k}")
    for i in range(k):
        top[i] = i + 1
    out = np.empty(n, dtype=np.int64)
    cdef long long[:] o = out
    with nogil:
        for r in range(n):
            for i in range(k):
                par[i] = 1 if rows[r, i] & 1 else 0
            o[r] = _boundary_cycles_c(top, par, k)
    return out
