# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: longest common subsequence and nearest-codeword search.

Every function here has a pure-Python twin in :mod:`ulamcodes._pykernels`
with the same signature and results.
"""
from libc.stdlib cimport malloc, free

import numpy as np


cdef int _lcs(const long long* x, Py_ssize_t nx,
              const long long* y, Py_ssize_t ny, int* row) nogil:
    # row has ny + 1 slots; rolling single-row DP
    cdef Py_ssize_t i, j
    cdef int diag, up, best
    for j in range(ny + 1):
        row[j] = 0
    for i in range(nx):
        diag = 0
        for j in range(ny):
            up = row[j + 1]
            if x[i] == y[j]:
                best = diag + 1
            else:
                best = up if up > row[j] else row[j]
            diag = up
            row[j + 1] = best
    return row[ny]


def lcs_length(x, y):
    """Length of a longest common subsequence of two integer sequences."""
    cdef long long[::1] xa = np.ascontiguousarray(x, dtype=np.int64)
    cdef long long[::1] ya = np.ascontiguousarray(y, dtype=np.int64)
    cdef Py_ssize_t nx = xa.shape[0], ny = ya.shape[0]
    if nx == 0 or ny == 0:
        return 0
    cdef int* row = <int*> malloc((ny + 1) * sizeof(int))
    if row == NULL:
        raise MemoryError()
    try:
        return _lcs(&xa[0], nx, &ya[0], ny, row)
    finally:
        free(row)


def far_from_all(word, const long long[:, ::1] book, int min_distance):
    """True when ``n - lcs(word, row) >= min_distance`` for every row of *book*."""
    cdef long long[::1] w = np.ascontiguousarray(word, dtype=np.int64)
    cdef Py_ssize_t n = w.shape[0], k, rows = book.shape[0]
    if rows == 0:
        return True
    cdef int limit = <int> n - min_distance
    cdef int* row = <int*> malloc((n + 1) * sizeof(int))
    if row == NULL:
        raise MemoryError()
    cdef bint ok = True
    try:
        with nogil:
            for k in range(rows):
                if _lcs(&w[0], n, &book[k, 0], n, row) > limit:
                    ok = False
                    break
    finally:
        free(row)
    return ok


def nearest(word, const long long[:, ::1] book):
    """Return ``(index, distance, tied)`` of the closest row of *book* to *word*."""
    cdef long long[::1] w = np.ascontiguousarray(word, dtype=np.int64)
    cdef Py_ssize_t n = w.shape[0], k, rows = book.shape[0]
    if rows == 0:
        raise ValueError("empty codebook")
    cdef int* row = <int*> malloc((n + 1) * sizeof(int))
    if row == NULL:
        raise MemoryError()
    cdef int best = -1, d
    cdef Py_ssize_t best_k = 0
    cdef bint tied = False
    try:
        with nogil:
            for k in range(rows):
                d = <int> n - _lcs(&w[0], n, &book[k, 0], n, row)
                if best < 0 or d < best:
                    best = d
                    best_k = k
                    tied = False
                elif d == best:
                    tied = True
    finally:
        free(row)
    return best_k, best, tied


def min_pairwise_distance(const long long[:, ::1] book):
    """Return ``(distance, i, j)`` for the closest pair of rows (first found)."""
    cdef Py_ssize_t rows = book.shape[0], n = book.shape[1], a, b
    if rows < 2:
        return None
    cdef int* row = <int*> malloc((n + 1) * sizeof(int))
    if row == NULL:
        raise MemoryError()
    cdef int best = -1, d
    cdef Py_ssize_t bi = 0, bj = 1
    try:
        with nogil:
            for a in range(rows):
                for b in range(a + 1, rows):
                    d = <int> n - _lcs(&book[a, 0], n, &book[b, 0], n, row)
                    if best < 0 or d < best:
                        best = d
                        bi = a
                        bj = b
    finally:
        free(row)
    return best, bi, bj
