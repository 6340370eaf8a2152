# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled finite-field elimination kernels (see ``_kernels_py`` for the reference)."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def rref_tables(i64[:, ::1] A, i64[:, ::1] add, i64[:, ::1] mul, i64[::1] neg, i64[::1] inv):
    cdef Py_ssize_t nrows = A.shape[0], ncols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef i64 s, f, t
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and A[i, c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            for k in range(ncols):
                t = A[r, k]
                A[r, k] = A[i, k]
                A[i, k] = t
        s = inv[A[r, c]]
        if s != 1:
            for k in range(c, ncols):
                A[r, k] = mul[s, A[r, k]]
        for j in range(nrows):
            if j == r:
                continue
            f = A[j, c]
            if f == 0:
                continue
            f = neg[f]
            for k in range(c, ncols):
                if A[r, k] != 0:
                    A[j, k] = add[A[j, k], mul[f, A[r, k]]]
        pivots.append(c)
        r += 1
    return pivots


def rref_modp(i64[:, ::1] A, i64 p):
    cdef Py_ssize_t nrows = A.shape[0], ncols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef i64 s, f, t
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and A[i, c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            for k in range(ncols):
                t = A[r, k]
                A[r, k] = A[i, k]
                A[i, k] = t
        s = pow(int(A[r, c]), -1, int(p))
        if s != 1:
            for k in range(c, ncols):
                A[r, k] = (A[r, k] * s) % p
        for j in range(nrows):
            if j == r:
                continue
            f = A[j, c]
            if f == 0:
                continue
            for k in range(c, ncols):
                if A[r, k] != 0:
                    A[j, k] = (A[j, k] - f * A[r, k]) % p
                    if A[j, k] < 0:
                        A[j, k] += p
        pivots.append(c)
        r += 1
    return pivots


def matmul_tables(i64[:, ::1] A, i64[:, ::1] B, i64[:, ::1] add, i64[:, ::1] mul):
    cdef Py_ssize_t n = A.shape[0], m = A.shape[1], q = B.shape[1]
    cdef Py_ssize_t i, j, k
    cdef i64 a
    out = np.zeros((n, q), dtype=np.int64)
    cdef i64[:, ::1] C = out
    for i in range(n):
        for j in range(m):
            a = A[i, j]
            if a == 0:
                continue
            for k in range(q):
                if B[j, k] != 0:
                    C[i, k] = add[C[i, k], mul[a, B[j, k]]]
    return out


def matmul_modp(i64[:, ::1] A, i64[:, ::1] B, i64 p):
    cdef Py_ssize_t n = A.shape[0], m = A.shape[1], q = B.shape[1]
    cdef Py_ssize_t i, j, k
    cdef i64 a
    # delay the reduction while the running sums cannot overflow int64
    cdef bint lazy = p < (1 << 20) and m < (1 << 22)
    out = np.zeros((n, q), dtype=np.int64)
    cdef i64[:, ::1] C = out
    for i in range(n):
        for j in range(m):
            a = A[i, j]
            if a == 0:
                continue
            if lazy:
                for k in range(q):
                    C[i, k] += a * B[j, k]
            else:
                for k in range(q):
                    C[i, k] = (C[i, k] + a * B[j, k]) % p
        if lazy:
            for k in range(q):
                C[i, k] %= p
    return out
