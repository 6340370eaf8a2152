"""Dense exact linear algebra.

Vectors are rows.  Reduced row echelon form is the single workhorse; every
subspace handed around the package is stored as its RREF basis, so equality
of subspaces is literal equality of row lists.

Finite fields with at most 256 elements (and prime fields of any size) go
through the kernels in :mod:`kext.exactnum.kernels`; all other fields use the
generic element-wise routines below.
"""
from __future__ import annotations

import numpy as np

from ..errors import MixedFields
from . import kernels
from . import poly as P
from .fields import TABLE_LIMIT, PrimeField


class Mat:
    """An ``nrows x ncols`` matrix over ``field`` (rows are Python lists)."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else (ncols or 0)

    @classmethod
    def parse(cls, field, rows):
        return cls(field, [[field.coerce(x) for x in r] for r in rows], 0)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field is other.field and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(map(tuple, self.rows))))

    def __repr__(self):
        f = self.field.format
        return f"Mat({self.field}, {[[f(x) for x in r] for r in self.rows]})"

    def __matmul__(self, other):
        return matmul(self, other)

    def __add__(self, other):
        _same(self, other)
        K = self.field
        return Mat(K, [[K.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                   self.ncols)

    def __sub__(self, other):
        _same(self, other)
        K = self.field
        return Mat(K, [[K.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                   self.ncols)

    def scale(self, c):
        K = self.field
        return Mat(K, [[K.mul(c, a) for a in r] for r in self.rows], self.ncols)

    @property
    def T(self):
        return Mat(self.field, [list(c) for c in zip(*self.rows)] if self.rows else [],
                   self.nrows)

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.rows for x in r)

    def flat(self):
        return [x for r in self.rows for x in r]

    def to_strings(self):
        f = self.field.format
        return [[f(x) for x in r] for r in self.rows]


def _same(A, B):
    if A.field is not B.field:
        raise MixedFields(f"matrices over {A.field} and {B.field}")


def identity(K, n):
    z, o = K.zero, K.one
    return Mat(K, [[o if i == j else z for j in range(n)] for i in range(n)], n)


def zeros(K, n, m):
    return Mat(K, [[K.zero] * m for _ in range(n)], m)


def _backend(K):
    if K.is_finite:
        if K.q <= TABLE_LIMIT:
            return "tables"
        if isinstance(K, PrimeField):
            return "modp"
    return "generic"


def _to_array(rows, ncols):
    if not rows:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


# ---------------------------------------------------------------------------
# echelon forms
# ---------------------------------------------------------------------------

def rref_rows(rows, ncols, K):
    """RREF of a list of rows; returns ``(nonzero_rows, pivots)``."""
    if not rows:
        return [], []
    be = _backend(K)
    if be == "tables":
        A = _to_array(rows, ncols)
        piv = kernels.rref_tables(A, *K.np_tables)
        return A[: len(piv)].tolist(), list(piv)
    if be == "modp":
        A = _to_array(rows, ncols)
        piv = kernels.rref_modp(A, K.p)
        return A[: len(piv)].tolist(), list(piv)
    return _rref_generic(rows, ncols, K)


def _rref_generic(rows, ncols, K):
    A = [list(r) for r in rows]
    z, one = K.zero, K.one
    sub, mul = K.sub, K.mul
    n = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, n):
            if A[i][c] != z:
                piv = i
                break
        if piv < 0:
            continue
        A[r], A[piv] = A[piv], A[r]
        prow = A[r]
        s = prow[c]
        if s != one:
            s = K.inv(s)
            prow = [mul(s, x) if x != z else z for x in prow]
            A[r] = prow
        nz = [k for k in range(c, ncols) if prow[k] != z]
        for i in range(n):
            if i == r:
                continue
            row = A[i]
            f = row[c]
            if f == z:
                continue
            for k in nz:
                row[k] = sub(row[k], mul(f, prow[k]))
        pivots.append(c)
        r += 1
        if r == n:
            break
    return A[:r], pivots


def rref(A: Mat):
    rows, piv = rref_rows(A.rows, A.ncols, A.field)
    return Mat(A.field, rows, A.ncols), piv


def rank(A: Mat) -> int:
    return len(rref_rows(A.rows, A.ncols, A.field)[1])


def row_space(A: Mat) -> Mat:
    return rref(A)[0]


def kernel_rows(rows, ncols, K):
    """Canonical RREF basis of ``{v : A v^T = 0}``."""
    R, piv = rref_rows(rows, ncols, K)
    pivset = set(piv)
    z, one = K.zero, K.one
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [z] * ncols
        v[f] = one
        for i, p in enumerate(piv):
            c = R[i][f]
            if c != z:
                v[p] = K.neg(c)
        basis.append(v)
    if not basis:
        return []
    return rref_rows(basis, ncols, K)[0]


def kernel(A: Mat) -> Mat:
    """Right null space: rows ``v`` with ``A v^T = 0``, in RREF."""
    return Mat(A.field, kernel_rows(A.rows, A.ncols, A.field), A.ncols)


def left_kernel(A: Mat) -> Mat:
    """Rows ``v`` with ``v A = 0``, in RREF."""
    return kernel(A.T) if A.nrows else Mat(A.field, [], 0)


# ---------------------------------------------------------------------------
# products and friends
# ---------------------------------------------------------------------------

def matmul_rows(A, B, K, ncols=None):
    if not A:
        return []
    if not B:
        return [[] for _ in A] if ncols is None else [[K.zero] * ncols for _ in A]
    be = _backend(K)
    if be == "tables":
        add, mul, _, _ = K.np_tables
        return kernels.matmul_tables(_to_array(A, len(B)), _to_array(B, len(B[0])), add, mul).tolist()
    if be == "modp":
        return kernels.matmul_modp(_to_array(A, len(B)), _to_array(B, len(B[0])), K.p).tolist()
    z = K.zero
    add, mul = K.add, K.mul
    m = len(B[0])
    Bnz = [[(j, b) for j, b in enumerate(row) if b != z] for row in B]
    out = []
    for row in A:
        acc = [z] * m
        for k, a in enumerate(row):
            if a == z:
                continue
            for j, b in Bnz[k]:
                acc[j] = add(acc[j], mul(a, b))
        out.append(acc)
    return out


def matmul(A: Mat, B: Mat) -> Mat:
    _same(A, B)
    if A.ncols != B.nrows:
        raise ValueError(f"shape mismatch {A.nrows}x{A.ncols} @ {B.nrows}x{B.ncols}")
    return Mat(A.field, matmul_rows(A.rows, B.rows, A.field, B.ncols), B.ncols)


def vecmat(v, A: Mat):
    return matmul_rows([v], A.rows, A.field, A.ncols)[0]


def inverse(A: Mat) -> Mat:
    K = A.field
    n = A.nrows
    aug = [list(r) + [K.one if i == j else K.zero for j in range(n)] for i, r in enumerate(A.rows)]
    R, piv = rref_rows(aug, 2 * n, K)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return Mat(K, [r[n:] for r in R[:n]], n)


def det(A: Mat):
    K = A.field
    n = A.nrows
    M = [list(r) for r in A.rows]
    z = K.zero
    d = K.one
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != z), None)
        if piv is None:
            return z
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = K.neg(d)
        d = K.mul(d, M[c][c])
        inv = K.inv(M[c][c])
        for i in range(c + 1, n):
            f = M[i][c]
            if f == z:
                continue
            f = K.mul(f, inv)
            row, prow = M[i], M[c]
            for k in range(c, n):
                if prow[k] != z:
                    row[k] = K.sub(row[k], K.mul(f, prow[k]))
    return d


def is_invertible(A: Mat) -> bool:
    return A.nrows == A.ncols and rank(A) == A.nrows


def block_diag(K, mats):
    n = sum(m.nrows for m in mats)
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append([K.zero] * off + list(r) + [K.zero] * (n - off - m.ncols))
        off += m.ncols
    return Mat(K, rows, n)


def kron(A: Mat, B: Mat) -> Mat:
    _same(A, B)
    K = A.field
    z = K.zero
    rows = []
    for ar in A.rows:
        for br in B.rows:
            row = []
            for a in ar:
                if a == z:
                    row.extend([z] * B.ncols)
                else:
                    row.extend(K.mul(a, b) for b in br)
            rows.append(row)
    return Mat(K, rows, A.ncols * B.ncols)


def map_matrix(A: Mat, fn, field) -> Mat:
    return Mat(field, [[fn(x) for x in r] for r in A.rows], A.ncols)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

def span(rows, ncols, K):
    """Canonical RREF basis of the span of ``rows``."""
    return rref_rows(rows, ncols, K)[0] if rows else []


def contains(basis, pivots, v, K) -> bool:
    """Whether ``v`` lies in the span of an RREF basis with given pivots."""
    return reduce_vector(basis, pivots, v, K) is None


def reduce_vector(basis, pivots, v, K):
    """Reduce ``v`` modulo an RREF basis; ``None`` if the residue vanishes."""
    z = K.zero
    r = list(v)
    for row, p in zip(basis, pivots):
        c = r[p]
        if c != z:
            for k, x in enumerate(row):
                if x != z:
                    r[k] = K.sub(r[k], K.mul(c, x))
    if all(x == z for x in r):
        return None
    return r


def spin_rows(rows, mats, K, n):
    """Smallest subspace containing ``rows`` and stable under right
    multiplication by every matrix in ``mats`` (given as row lists)."""
    basis, piv = rref_rows(rows, n, K) if rows else ([], [])
    frontier = basis
    while frontier:
        fresh = []
        for M in mats:
            for v in matmul_rows(frontier, M, K, n):
                r = reduce_vector(basis, piv, v, K)
                if r is not None:
                    fresh.append(r)
        if not fresh:
            break
        frontier, _ = rref_rows(fresh, n, K)
        basis, piv = rref_rows(basis + frontier, n, K)
    return basis, piv


def solve_left(A_rows, b, K, ncols):
    """One solution ``x`` of ``x A = b`` (``A`` given by rows), or ``None``."""
    m = len(A_rows)
    # columns of A become equations in the unknowns x_0..x_{m-1}
    aug = [[A_rows[i][j] for i in range(m)] + [b[j]] for j in range(ncols)]
    R, piv = rref_rows(aug, m + 1, K)
    if piv and piv[-1] == m:
        return None
    x = [K.zero] * m
    for row, p in zip(R, piv):
        x[p] = row[m]
    return x


def pivots_of(basis, K):
    z = K.zero
    return [next(i for i, x in enumerate(r) if x != z) for r in basis]


def intersect(U, V, ncols, K):
    """Intersection of two row spaces."""
    if not U or not V:
        return []
    # v in U and V  <=>  a U = b V ; solve [U; -V]
    stacked = [list(u) for u in U] + [[K.neg(x) for x in v] for v in V]
    coeffs = kernel_rows([list(c) for c in zip(*stacked)], len(stacked), K)
    out = []
    for c in coeffs:
        w = [K.zero] * ncols
        for a, u in zip(c[: len(U)], U):
            if a != K.zero:
                w = [K.add(x, K.mul(a, y)) for x, y in zip(w, u)]
        out.append(w)
    return span(out, ncols, K)


# ---------------------------------------------------------------------------
# characteristic and minimal polynomials
# ---------------------------------------------------------------------------

def charpoly(A: Mat):
    """Characteristic polynomial (monic, low degree first) by Hessenberg reduction."""
    K = A.field
    n = A.nrows
    H = [list(r) for r in A.rows]
    z = K.zero
    # reduce to upper Hessenberg form by similarity transforms
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1] != z), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for r in H:
                r[i], r[m] = r[m], r[i]
        t = H[m][m - 1]
        tinv = K.inv(t)
        for i in range(m + 1, n):
            u = H[i][m - 1]
            if u == z:
                continue
            u = K.mul(u, tinv)
            # row_i -= u * row_m ; col_m += u * col_i
            rm, ri = H[m], H[i]
            for j in range(n):
                if rm[j] != z:
                    ri[j] = K.sub(ri[j], K.mul(u, rm[j]))
            for r in H:
                if r[i] != z:
                    r[m] = K.add(r[m], K.mul(u, r[i]))
    # characteristic polynomials of leading principal blocks
    polys = [[K.one]]
    for m in range(1, n + 1):
        pm = P.mul([K.neg(H[m - 1][m - 1]), K.one], polys[m - 1], K)
        t = K.one
        for i in range(1, m):
            t = K.mul(t, H[m - i][m - i - 1])
            c = K.mul(t, H[m - i - 1][m - 1])
            if c != z:
                pm = P.sub(pm, P.scale(polys[m - i - 1], c, K), K)
        polys.append(pm)
    return polys[n]


def minpoly(A: Mat):
    """Minimal polynomial via the Krylov dependency of the powers of ``A``."""
    K = A.field
    n = A.nrows
    I = identity(K, n)
    powers = [I.flat()]
    cur = I
    basis, piv = [], []
    # maintain RREF of flattened powers together with the combination that produced them
    while True:
        # test whether powers[-1] is in span(powers[:-1])
        m = len(powers)
        rows = [list(v) + [K.one if j == i else K.zero for j in range(m)] for i, v in enumerate(powers)]
        R, pv = rref_rows(rows, n * n + m, K)
        dep = [r for r, p in zip(R, pv) if p >= n * n]
        if dep:
            c = dep[0][n * n:]
            return P.monic(P.trim(c, K), K)
        cur = cur @ A
        powers.append(cur.flat())
