# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled distance kernels; mirrors the signatures of _kernels_py.

Row entries must already be reduced into [0, m) where a modulus applies.
Each band writes disjoint slices of the output, so banded execution is
deterministic under any thread schedule.
"""

import numpy as np

cimport numpy as cnp


def hamming_band(cnp.int64_t[:, ::1] rows, Py_ssize_t start, Py_ssize_t stop,
                 cnp.int64_t[::1] out):
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t width = rows.shape[1]
    cdef Py_ssize_t i, j, t, base
    cdef cnp.int64_t d
    with nogil:
        for i in range(start, stop):
            base = i * n - (i * (i + 1)) // 2 - i - 1
            for j in range(i + 1, n):
                d = 0
                for t in range(width):
                    if rows[i, t] != rows[j, t]:
                        d += 1
                out[base + j] = d


def weighted_band(cnp.int64_t[:, ::1] rows, cnp.int64_t[::1] wtab, Py_ssize_t m,
                  Py_ssize_t start, Py_ssize_t stop, cnp.int64_t[::1] out):
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t width = rows.shape[1]
    cdef Py_ssize_t i, j, t, base
    cdef cnp.int64_t d
    with nogil:
        for i in range(start, stop):
            base = i * n - (i * (i + 1)) // 2 - i - 1
            for j in range(i + 1, n):
                d = 0
                for t in range(width):
                    # entries lie in [0, m), so the shifted remainder is exact
                    d += wtab[(rows[i, t] - rows[j, t] + m) % m]
                out[base + j] = d


def counts_band(cnp.int64_t[:, ::1] rows, Py_ssize_t m, Py_ssize_t start,
                Py_ssize_t stop, cnp.int64_t[:, ::1] out):
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t width = rows.shape[1]
    cdef Py_ssize_t i, j, t, base
    with nogil:
        for i in range(start, stop):
            base = i * n - (i * (i + 1)) // 2 - i - 1
            for j in range(i + 1, n):
                for t in range(width):
                    out[base + j, (rows[i, t] - rows[j, t] + m) % m] += 1
