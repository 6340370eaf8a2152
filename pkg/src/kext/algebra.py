"""Finite-dimensional associative unital algebras given by structure constants.

``e_i * e_j = sum_k sc[i][j][k] e_k``.  Elements are coordinate rows.  Modules
are right modules, so the operator attached to ``a`` on the regular module is
right multiplication ``R_a`` with ``R_{ab} = R_a R_b``.
"""
from __future__ import annotations

import math
import random
from functools import cached_property
from itertools import product

import numpy as np

from .errors import BadParameters, BadUnit, NotAssociative, UnsupportedField
from .exactnum import linalg as L
from .exactnum import poly as P
from .exactnum.fields import FiniteField, algebraic
from .groups import Group, check_group, named_group


class Algebra:
    """An algebra over ``field`` with basis ``e_0..e_{n-1}``."""

    def __init__(self, field, sc, unit, name=None, group: Group | None = None, check=True,
                 generators=None):
        self.field = field
        self.dim = len(sc)
        self.sc = sc
        self.unit = list(unit)
        self.name = name
        self.group = group
        self._generators = generators
        if check:
            self._validate()

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim}, over {self.field})"

    # -- validation -----------------------------------------------------------
    def _validate(self):
        n, K = self.dim, self.field
        if len(self.unit) != n or any(len(r) != n or any(len(c) != n for c in r) for r in self.sc):
            raise BadParameters("structure constants must have shape n x n x n")
        R = self.right_mats
        Lm = self.left_mats
        for i, j in product(range(n), repeat=2):
            cij = self.sc[i][j]
            for k in range(n):
                # (e_i e_j) e_k  versus  e_i (e_j e_k)
                lhs = L.vecmat(cij, R[k])
                rhs = L.vecmat(self.sc[j][k], Lm[i])
                if lhs != rhs:
                    raise NotAssociative((i, j, k))
        for i in range(n):
            ei = [K.one if t == i else K.zero for t in range(n)]
            if self.mult(self.unit, ei) != ei or self.mult(ei, self.unit) != ei:
                raise BadUnit(f"unit fails on basis element {i}")

    # -- structure ----------------------------------------------------------------
    @cached_property
    def right_mats(self) -> list:
        """``R_i``: row ``j`` is ``e_j e_i``."""
        n = self.dim
        return [L.Mat(self.field, [list(self.sc[j][i]) for j in range(n)], n) for i in range(n)]

    @cached_property
    def left_mats(self) -> list:
        """``L_i``: row ``j`` is ``e_i e_j``."""
        n = self.dim
        return [L.Mat(self.field, [list(self.sc[i][j]) for j in range(n)], n) for i in range(n)]

    def basis_vector(self, i):
        K = self.field
        return [K.one if t == i else K.zero for t in range(self.dim)]

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def mult(self, x, y):
        K = self.field
        z = K.zero
        out = [z] * self.dim
        for i, a in enumerate(x):
            if a == z:
                continue
            row = self.sc[i]
            for j, b in enumerate(y):
                if b == z:
                    continue
                ab = K.mul(a, b)
                for k, c in enumerate(row[j]):
                    if c != z:
                        out[k] = K.add(out[k], K.mul(ab, c))
        return out

    def power(self, x, e: int):
        out = list(self.unit)
        for _ in range(e):
            out = self.mult(out, x)
        return out

    def combine(self, coeffs, mats):
        """``sum c_i mats[i]`` for coordinate vector ``coeffs``."""
        K = self.field
        n = mats[0].nrows if mats else 0
        m = mats[0].ncols if mats else 0
        acc = [[K.zero] * m for _ in range(n)]
        z = K.zero
        for c, M in zip(coeffs, mats):
            if c == z:
                continue
            for r, row in zip(acc, M.rows):
                for k, x in enumerate(row):
                    if x != z:
                        r[k] = K.add(r[k], K.mul(c, x))
        return L.Mat(K, acc, m)

    def right_matrix(self, x) -> L.Mat:
        return self.combine(x, self.right_mats)

    def parse_element(self, entries):
        return [self.field.coerce(c) for c in entries]

    def format_element(self, x):
        return [self.field.format(c) for c in x]

    @property
    def is_group_algebra(self) -> bool:
        return self.group is not None

    @cached_property
    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.sc[i][j] == self.sc[j][i] for i in range(n) for j in range(i + 1, n))

    @cached_property
    def generators(self) -> list[int]:
        """Basis indices generating the algebra (group generators for group algebras)."""
        if self._generators is not None:
            return list(self._generators)
        if self.group is not None:
            return list(self.group.generators)
        K, n = self.field, self.dim
        gens: list[int] = []
        W, piv = L.rref_rows([self.unit], n, K)
        while len(W) < n:
            i = next(i for i in range(n) if not L.contains(W, piv, self.basis_vector(i), K))
            gens.append(i)
            W, piv = L.spin_rows([self.unit], [self.right_mats[g].rows for g in gens], K, n)
        return gens

    # -- ideals ---------------------------------------------------------------------
    def ideal_product(self, I, J):
        """Span of ``{x y : x in I, y in J}``."""
        prods = [self.mult(x, y) for x in I for y in J]
        return L.span(prods, self.dim, self.field)

    def two_sided_ideal(self, rows):
        n, K = self.dim, self.field
        mats = [M.rows for M in self.right_mats] + [M.rows for M in self.left_mats]
        return L.spin_rows(rows, mats, K, n)[0]

    @cached_property
    def radical(self) -> list:
        """RREF basis of the Jacobson radical."""
        K = self.field
        if K.characteristic == 0:
            return _radical_trace_form(self)
        if isinstance(K, FiniteField):
            return _radical_char_p(self)
        raise UnsupportedField(f"radical over {K} is not available (infinite field of positive characteristic)")

    def radical_supported(self) -> bool:
        K = self.field
        return K.characteristic == 0 or isinstance(K, FiniteField)

    def radical_powers(self) -> list:
        """``rad, rad^2, ...`` down to ``0``; certifies nilpotency."""
        rad = self.radical
        chain = [rad]
        while chain[-1]:
            nxt = self.ideal_product(chain[-1], rad)
            if len(nxt) == len(chain[-1]):
                raise AssertionError("radical is not nilpotent")
            chain.append(nxt)
        return chain

    def is_semisimple(self) -> bool:
        return not self.radical

    @cached_property
    def center(self) -> list:
        n, K = self.dim, self.field
        cols = []
        for g in self.generators:
            D = self.right_mats[g] - self.left_mats[g]
            cols.append(D)
        if not cols:
            return L.span([self.basis_vector(i) for i in range(n)], n, K)
        stacked = [sum((M.rows[r] for M in cols), []) for r in range(n)]
        return L.left_kernel(L.Mat(K, stacked, n * len(cols))).rows

    # -- Frobenius ----------------------------------------------------------------------
    def gram(self, lam) -> L.Mat:
        K = self.field
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = K.zero
                for c, l in zip(self.sc[i][j], lam):
                    if c != K.zero and l != K.zero:
                        acc = K.add(acc, K.mul(c, l))
                row.append(acc)
            rows.append(row)
        return L.Mat(K, rows, n)

    def is_frobenius_functional(self, lam) -> bool:
        return L.rank(self.gram(lam)) == self.dim

    def is_frobenius(self, seed: int = 0):
        """``(True, lam)`` with an exact witness functional, or ``(False, None)``."""
        return _frobenius_search(self, random.Random(seed))

    # -- separability ---------------------------------------------------------------
    def separability_idempotent(self):
        """An element ``e`` of ``E (x) E^op`` with ``a e = e a`` and ``mu(e) = 1``.

        Returned as an ``n x n`` coefficient array ``x[i][j]`` for ``e_i (x) e_j``,
        or ``None`` when no such element exists.
        """
        return _separability_idempotent(self)

    def is_separable(self) -> bool:
        return self.separability_idempotent() is not None

    # -- modules ----------------------------------------------------------------------
    def regular_module(self):
        from .modules import Module
        return Module(self, [M for M in self.right_mats], check=False, name=f"reg({self.name})")

    def opposite(self):
        n = self.dim
        sc = [[list(self.sc[j][i]) for j in range(n)] for i in range(n)]
        return Algebra(self.field, sc, self.unit, name=f"{self.name}^op", check=False)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def build_algebra(field, sc, unit, name=None, check=True) -> Algebra:
    sc = [[[field.coerce(c) for c in cell] for cell in row] for row in sc]
    unit = [field.coerce(c) for c in unit]
    return Algebra(field, sc, unit, name=name, check=check)


def group_algebra(cayley, field, name=None) -> Algebra:
    """Group algebra from a Cayley table (or a :class:`Group`, or a group name)."""
    if isinstance(cayley, str):
        group = named_group(cayley)
    elif isinstance(cayley, Group):
        group = cayley
    else:
        table = tuple(tuple(int(x) for x in r) for r in cayley)
        check_group(table)
        group = Group("G", table, tuple(str(i) for i in range(len(table))), ())
        # pick generators greedily from the table
        group = Group(group.name, table, group.labels, _group_generators(table))
    e = check_group(group.table)
    n = group.order
    K = field
    sc = [[[K.one if k == group.table[i][j] else K.zero for k in range(n)] for j in range(n)]
          for i in range(n)]
    unit = [K.one if k == e else K.zero for k in range(n)]
    return Algebra(K, sc, unit, name=name or f"{field}[{group.name}]", group=group, check=False)


def _group_generators(table):
    n = len(table)
    e = check_group(table)
    gens = []
    reached = {e}
    while len(reached) < n:
        g = min(set(range(n)) - reached)
        gens.append(g)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = table[x][s]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
    return tuple(gens)


def quaternion_algebra(a, b, field, name=None) -> Algebra:
    """Basis ``1, i, j, k`` with ``i^2 = a``, ``j^2 = b``, ``ij = -ji = k``."""
    K = field
    if K.characteristic == 2:
        raise BadParameters("quaternion algebras need characteristic other than 2")
    a, b = K.coerce(a), K.coerce(b)
    if a == K.zero or b == K.zero:
        raise BadParameters("quaternion parameters must be nonzero")
    z, o = K.zero, K.one
    ab = K.mul(a, b)

    def v(c0=z, c1=z, c2=z, c3=z):
        return [c0, c1, c2, c3]
    neg = K.neg
    table = {
        (0, 0): v(o), (0, 1): v(z, o), (0, 2): v(z, z, o), (0, 3): v(z, z, z, o),
        (1, 0): v(z, o), (1, 1): v(a), (1, 2): v(z, z, z, o), (1, 3): v(z, z, a),
        (2, 0): v(z, z, o), (2, 1): v(z, z, z, neg(o)), (2, 2): v(b), (2, 3): v(z, neg(b)),
        (3, 0): v(z, z, z, o), (3, 1): v(z, z, neg(a)), (3, 2): v(z, b), (3, 3): v(neg(ab)),
    }
    sc = [[table[i, j] for j in range(4)] for i in range(4)]
    nm = name or f"({K.format(a)},{K.format(b)})_{K}"
    return Algebra(K, sc, v(o), name=nm, check=True, generators=[1, 2])


def polyquotient(minpoly, field, name=None) -> Algebra:
    """``F[x]/(f)`` with basis ``1, x, ..., x^(d-1)``."""
    K = field
    f = P.trim([K.coerce(c) for c in minpoly], K)
    if len(f) < 2:
        raise BadParameters("polyquotient needs a polynomial of degree >= 1")
    f = P.monic(f, K)
    d = len(f) - 1
    powers = []
    for e in range(2 * d - 1):
        r = P.rem(P.monomial(K.one, e, K), f, K)
        powers.append(r + [K.zero] * (d - len(r)))
    sc = [[list(powers[i + j]) for j in range(d)] for i in range(d)]
    unit = powers[0]
    nm = name or f"{K}[x]/({P.to_str(f, K)})"
    return Algebra(K, sc, unit, name=nm, check=False, generators=[1] if d > 1 else [])


def matrix_units(n, pairs, K):
    """Structure constants of the span of matrix units ``E_ij`` for ``pairs``."""
    index = {p: t for t, p in enumerate(pairs)}
    m = len(pairs)
    sc = [[[K.zero] * m for _ in range(m)] for _ in range(m)]
    for (i, j), s in index.items():
        for (k, l), t in index.items():
            if j == k:
                sc[s][t][index[(i, l)]] = K.one
    unit = [K.one if i == j else K.zero for (i, j) in pairs]
    return sc, unit


def triangular_algebra(n, field, lower=False, name=None) -> Algebra:
    """Upper (or lower) triangular ``n x n`` matrices; basis ``E_ij`` in lexicographic order."""
    pairs = [(i, j) for i in range(n) for j in range(n) if (i >= j if lower else i <= j)]
    sc, unit = matrix_units(n, pairs, field)
    kind = "L" if lower else "T"
    return Algebra(field, sc, unit, name=name or f"{kind}{n}({field})", check=False)


def matrix_algebra(n, field, name=None) -> Algebra:
    pairs = [(i, j) for i in range(n) for j in range(n)]
    sc, unit = matrix_units(n, pairs, field)
    return Algebra(field, sc, unit, name=name or f"M{n}({field})", check=False)


def product_algebra(A: Algebra, B: Algebra, name=None) -> Algebra:
    if A.field is not B.field:
        from .errors import FieldMismatch
        raise FieldMismatch("factors of a product must share the field")
    K = A.field
    a, b = A.dim, B.dim
    n = a + b
    sc = [[[K.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j in product(range(a), repeat=2):
        sc[i][j][:a] = list(A.sc[i][j])
    for i, j in product(range(b), repeat=2):
        sc[a + i][a + j][a:] = list(B.sc[i][j])
    unit = list(A.unit) + list(B.unit)
    return Algebra(K, sc, unit, name=name or f"{A.name}x{B.name}", check=False)


def quotient_algebra(E: Algebra, ideal, name=None) -> Algebra:
    """``E/I`` for a two-sided ideal ``I`` (rows); basis = images of non-pivot ``e_c``."""
    K, n = E.field, E.dim
    I, piv = L.rref_rows(list(ideal), n, K) if ideal else ([], [])
    closure = E.two_sided_ideal(I) if I else []
    if len(closure) != len(I):
        raise BadParameters("quotient requires a two-sided ideal")
    cols = [c for c in range(n) if c not in set(piv)]

    def proj(v):
        r = L.reduce_vector(I, piv, v, K)
        if r is None:
            return [K.zero] * len(cols)
        return [r[c] for c in cols]
    sc = [[proj(E.sc[a][b]) for b in cols] for a in cols]
    unit = proj(E.unit)
    return Algebra(K, sc, unit, name=name or f"{E.name}/I", check=False)


def field_algebra(large, small=None, name=None) -> Algebra:
    """A one-step algebraic extension ``base[v]/(f)`` viewed as an algebra over ``base``."""
    if large.base is None or not hasattr(large, "minpoly"):
        raise BadParameters(f"{large} is not an algebraic step")
    return polyquotient(list(large.minpoly), large.base, name=name or f"{large}/{large.base}")


# ---------------------------------------------------------------------------
# radical
# ---------------------------------------------------------------------------

def _radical_trace_form(E: Algebra):
    """Characteristic zero: ``rad = {x : Tr(R_{xy}) = 0 for all y}``."""
    K, n = E.field, E.dim
    traces = []
    for M in E.right_mats:
        t = K.zero
        for i in range(n):
            t = K.add(t, M.rows[i][i])
        traces.append(t)
    T = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = K.zero
            for c, t in zip(E.sc[i][j], traces):
                if c != K.zero and t != K.zero:
                    acc = K.add(acc, K.mul(c, t))
            row.append(acc)
        T.append(row)
    return L.kernel(L.Mat(K, T, n)).rows  # T is symmetric


def _prime_structure(E: Algebra):
    """Right-multiplication matrices of ``E`` viewed over its prime field.

    The prime-field basis is ``b_(i,j) = beta_j e_i`` where ``beta_j`` has
    code ``p^j``; coordinates of a finite-field element are its base-``p`` digits.
    """
    K = E.field
    n, k, p = E.dim, K.k, K.p
    betas = [p ** j for j in range(k)]
    N = n * k
    mats = np.zeros((N, N, N), dtype=np.int64)
    for r in range(n):
        for s in range(k):
            t = r * k + s
            for i in range(n):
                for j in range(k):
                    bb = K.mul(betas[j], betas[s])
                    row = []
                    for c in E.sc[i][r]:
                        row.extend(K.digits(K.mul(bb, c)))
                    mats[t, i * k + j] = row
    return mats


def _int_trace_power(M, e, mod):
    """``Tr(M^e) mod mod`` for an integer matrix (entries already reduced)."""
    result = np.eye(M.shape[0], dtype=np.int64)
    base = M % mod
    while e:
        if e & 1:
            result = (result @ base) % mod
        e >>= 1
        if e:
            base = (base @ base) % mod
    return int(np.trace(result)) % mod


_USE_BLAS = True


def _batched_trace_power(Ra, matsf, e, mod, p):
    """``(Tr((R_a R_t)^e) mod mod) / e mod p`` for every ``t``."""
    X = np.matmul(Ra.astype(np.float64), matsf) % p
    result = None
    while e:
        if e & 1:
            result = X.copy() if result is None else np.matmul(result, X) % mod
        e >>= 1
        if e:
            X = np.matmul(X, X) % mod
    tr = np.trace(result, axis1=1, axis2=2).astype(np.int64) % mod
    return (tr // (mod // p)) % p


def _radical_char_p(E: Algebra):
    """Finite fields: layered trace functionals over the prime field.

    ``I_{-1} = A``; ``I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}`` with
    ``g_i(a) = (Tr(lift(a)^(p^i)) mod p^(i+1)) / p^i``; the radical is ``I_l``
    for ``l = floor(log_p N)``.
    """
    K = E.field
    p = K.p
    mats = _prime_structure(E)
    N = mats.shape[0]
    if N == 0:
        return []
    l = int(math.floor(math.log(N, p) + 1e-12))
    while p ** (l + 1) <= N:
        l += 1
    basis = np.eye(N, dtype=np.int64)
    matsf = mats.astype(np.float64)
    for i in range(l + 1):
        if basis.shape[0] == 0:
            break
        mod = p ** (i + 1)
        e = p ** i
        G = np.zeros((basis.shape[0], N), dtype=np.int64)
        exact_float = _USE_BLAS and N * (mod - 1) ** 2 < 2 ** 52
        for s, a in enumerate(basis):
            Ra = np.tensordot(a, mats, axes=(0, 0)) % p
            if exact_float:
                # all N products R_a R_b at once; float64 BLAS is exact below 2^53
                G[s] = _batched_trace_power(Ra, matsf, e, mod, p)
                continue
            for t in range(N):
                Rab = (Ra @ mats[t]) % p
                G[s, t] = (_int_trace_power(Rab, e, mod) // e) % p
        F = _prime(p)
        combos = L.kernel_rows(G.T.tolist(), basis.shape[0], F)
        if not combos:
            basis = np.zeros((0, N), dtype=np.int64)
            break
        basis = (np.array(combos, dtype=np.int64) @ basis) % p
    if basis.shape[0] == 0:
        return []
    # back to coordinates over K
    k = K.k
    vecs = []
    for row in basis.tolist():
        vecs.append([K.from_digits(row[i * k:(i + 1) * k]) for i in range(E.dim)])
    return L.span(vecs, E.dim, K)


def _prime(p):
    from .exactnum.fields import GF
    return GF(p)


# ---------------------------------------------------------------------------
# Frobenius search
# ---------------------------------------------------------------------------

EXHAUSTIVE_FROBENIUS = 1 << 12
_BOX = 10 ** 6


def _frobenius_candidates(E: Algebra):
    K, n = E.field, E.dim
    z, o = K.zero, K.one
    for k in range(n):
        yield [o if t == k else z for t in range(n)]
    yield [o] * n
    for k in range(n):
        yield [o if t <= k else z for t in range(n)]


def _sample(K, rng):
    if K.is_finite:
        return K.random(rng)
    if K.characteristic == 0:
        return K.from_int(rng.randint(-_BOX, _BOX))
    # positive characteristic, infinite: a random polynomial in the lowest variable
    from .exactnum.fields import RationalFunctionField
    T = next(f for f in K.levels if isinstance(f, RationalFunctionField))
    B = T.base
    num = P.trim([B.random(rng) for _ in range(24)], B)
    return K.embed(T._norm(num, [B.one]), T)


def _frobenius_search(E: Algebra, rng):
    K, n = E.field, E.dim
    if n == 0:
        return True, []
    for lam in _frobenius_candidates(E):
        if E.is_frobenius_functional(lam):
            return True, lam
    if K.is_finite and K.q ** n <= EXHAUSTIVE_FROBENIUS:
        for digits in product(range(K.q), repeat=n):
            lam = list(digits)
            if E.is_frobenius_functional(lam):
                return True, lam
        return False, None
    for _ in range(max(20, 4 * n)):
        lam = [_sample(K, rng) for _ in range(n)]
        if E.is_frobenius_functional(lam):
            return True, lam
    if K.is_finite:
        # the Gram determinant may vanish on every point of a small field;
        # evaluate it over a large extension before concluding
        big = _large_extension(K, rng)
        if big is not None:
            Eb = Algebra(big, E.sc, E.unit, check=False)
            for _ in range(20):
                lam = [big.random(rng) for _ in range(n)]
                if Eb.is_frobenius_functional(lam):
                    # a witness exists over K; keep sampling until one is found
                    for _ in range(20000):
                        lam = [K.random(rng) for _ in range(n)]
                        if E.is_frobenius_functional(lam):
                            return True, lam
                    raise AssertionError("Frobenius witness over the ground field not found")
    return False, None


def _large_extension(K, rng):
    from .exactnum.factor import random_irreducible
    from .exactnum.fields import FINITE_LIMIT
    m = 1
    while K.q ** (m + 1) <= FINITE_LIMIT:
        m += 1
    if m < 2:
        return None
    f = random_irreducible(K, m, rng)
    var = "_z"
    while var in K.variables():
        var += "_"
    return algebraic(K, var, f, check=False)


# ---------------------------------------------------------------------------
# separability idempotent
# ---------------------------------------------------------------------------

def _separability_idempotent(E: Algebra):
    K, n = E.field, E.dim
    z = K.zero
    gens = E.generators
    nvar = n * n
    # equations are columns; build rows indexed by unknowns (i, j) -> i*n + j
    ncols = nvar * len(gens) + n
    rows = []
    for i in range(n):
        for j in range(n):
            row = [z] * ncols
            for gi, g in enumerate(gens):
                off = gi * nvar
                # g e_i (x) e_j
                for k, c in enumerate(E.sc[g][i]):
                    if c != z:
                        row[off + k * n + j] = K.add(row[off + k * n + j], c)
                # - e_i (x) e_j g
                for k, c in enumerate(E.sc[j][g]):
                    if c != z:
                        row[off + i * n + k] = K.sub(row[off + i * n + k], c)
            off = nvar * len(gens)
            for k, c in enumerate(E.sc[i][j]):
                row[off + k] = c
            rows.append(row)
    rhs = [z] * (nvar * len(gens)) + list(E.unit)
    x = L.solve_left(rows, rhs, K, ncols)
    if x is None:
        return None
    return [x[i * n:(i + 1) * n] for i in range(n)]


def is_separable_algebra(E: Algebra) -> bool:
    return E.is_separable()


def center(E: Algebra):
    return E.center


def radical(E: Algebra):
    return E.radical


def is_semisimple(E: Algebra) -> bool:
    return E.is_semisimple()


def is_frobenius(E: Algebra, seed: int = 0):
    return E.is_frobenius(seed)


def regular_module(E: Algebra):
    return E.regular_module()
