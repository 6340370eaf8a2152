"""Reference implementation of the finite-field elimination kernels.

Same signatures and semantics as the compiled ``_kernels`` extension; used
when the extension is not built or ``KEXT_PURE_PYTHON`` is set.  Arrays are
``int64`` with entries that are field codes.
"""
import numpy as np


def rref_tables(A, add, mul, neg, inv):
    """Reduce ``A`` in place to reduced row echelon form; return pivot columns."""
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        s = inv[A[r, c]]
        if s != 1:
            A[r] = mul[s, A[r]]
        prow = A[r]
        col = A[:, c].copy()
        col[r] = 0
        for j in np.nonzero(col)[0]:
            A[j] = add[A[j], mul[neg[col[j]], prow]]
        pivots.append(c)
        r += 1
    return pivots


def rref_modp(A, p):
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        s = pow(int(A[r, c]), -1, p)
        if s != 1:
            A[r] = A[r] * s % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def matmul_tables(A, B, add, mul):
    n, m = A.shape
    m2, k = B.shape
    C = np.zeros((n, k), dtype=np.int64)
    for j in range(m):
        C = add[C, mul[A[:, j][:, None], B[j][None, :]]]
    return C


def matmul_modp(A, B, p):
    if p < (1 << 20):
        return (A @ B) % p
    C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        C = (C + np.outer(A[:, j], B[j]) % p) % p
    return C
