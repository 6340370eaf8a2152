"""Right modules over structure-constant algebras.

A module of dimension ``m`` stores one ``m x m`` action matrix per algebra
basis element; vectors are rows and ``v . a = v @ action(a)``.  An intertwiner
``M -> N`` is an ``m x n`` matrix ``Phi`` with ``rho_M(a) Phi = Phi rho_N(a)``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .algebra import Algebra
from .errors import (
    BadModule,
    BadParameters,
    DifferentAlgebras,
    NotAGroupAlgebra,
    TooLarge,
    UnsupportedField,
)
from .exactnum import linalg as L
from .exactnum import poly as P
from .exactnum.factor import certify_irreducible, factor, supports_factor
from .exactnum.fields import FINITE_LIMIT, FiniteField


class Module:
    def __init__(self, alg: Algebra, action, check=True, name=None, dim=None):
        self.alg = alg
        self.field = alg.field
        self.action = list(action)
        self.dim = dim if dim is not None else (self.action[0].nrows if self.action else 0)
        self.name = name
        if len(self.action) != alg.dim:
            raise BadModule(f"need {alg.dim} action matrices, got {len(self.action)}")
        if check:
            self._validate()

    def __repr__(self):
        return f"Module({self.name or '?'}, dim={self.dim}, over {self.alg.name})"

    def _validate(self):
        A, K, m = self.alg, self.field, self.dim
        for M in self.action:
            if M.field is not K:
                raise BadModule("action matrices must live over the algebra's field")
            if M.nrows != m or M.ncols != m:
                raise BadModule("action matrices must be square of the module dimension")
        if A.group is not None:
            # a group algebra action is determined by the group elements
            T = A.group.table
            for i in range(A.dim):
                for j in range(A.dim):
                    if self.action[i] @ self.action[j] != self.action[T[i][j]]:
                        raise BadModule(f"action is not multiplicative at ({i}, {j})")
        else:
            for i in range(A.dim):
                for j in range(A.dim):
                    lhs = self.action[i] @ self.action[j]
                    if lhs != A.combine(A.sc[i][j], self.action):
                        raise BadModule(f"action is not multiplicative at ({i}, {j})")
        if A.combine(A.unit, self.action) != L.identity(K, m):
            raise BadModule("unit does not act as the identity")

    @cached_property
    def gen_mats(self) -> list:
        return [self.action[g] for g in self.alg.generators]

    def act(self, x) -> L.Mat:
        if self.dim == 0:
            return L.Mat(self.field, [], 0)
        return self.alg.combine(x, self.action)

    def identity_rows(self):
        return L.identity(self.field, self.dim).rows

    def same_as(self, other) -> bool:
        return self.alg is other.alg and self.dim == other.dim and self.action == other.action


@dataclass
class HomSpace:
    source: Module
    target: Module
    basis: list  # of Mat, source.dim x target.dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coeffs) -> L.Mat:
        return self.source.alg.combine(coeffs, self.basis) if self.basis else \
            L.zeros(self.source.field, self.source.dim, self.target.dim)


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------

def _hom_system(M: Module, N: Module):
    K = M.field
    m, n = M.dim, N.dim
    z = K.zero
    rows = []
    for A, B in zip(M.gen_mats, N.gen_mats):
        Ar, Br = A.rows, B.rows
        for a in range(m):
            for b in range(n):
                row = [z] * (m * n)
                for c in range(m):
                    x = Ar[a][c]
                    if x != z:
                        row[c * n + b] = K.add(row[c * n + b], x)
                for c in range(n):
                    y = Br[c][b]
                    if y != z:
                        row[a * n + c] = K.sub(row[a * n + c], y)
                if any(v != z for v in row):
                    rows.append(row)
    return rows


def hom_space(M: Module, N: Module) -> HomSpace:
    """All intertwiners ``M -> N`` (RREF basis of the flattened solution space)."""
    if M.alg is not N.alg:
        raise DifferentAlgebras("modules over different algebras")
    K = M.field
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return HomSpace(M, N, [])
    rows = _hom_system(M, N)
    if rows:
        flat = L.kernel_rows(rows, m * n, K)
    else:
        flat = L.identity(K, m * n).rows
    basis = [L.Mat(K, [v[a * n:(a + 1) * n] for a in range(m)], n) for v in flat]
    return HomSpace(M, N, basis)


def is_intertwiner(Phi: L.Mat, M: Module, N: Module) -> bool:
    return all(A @ Phi == Phi @ B for A, B in zip(M.action, N.action))


def end_dim(M: Module) -> int:
    return hom_space(M, M).dim


# ---------------------------------------------------------------------------
# submodules, quotients, sums
# ---------------------------------------------------------------------------

def spin(M: Module, vectors) -> list:
    """Submodule generated by ``vectors`` (RREF rows)."""
    vecs = [list(v) for v in vectors]
    if not vecs or M.dim == 0:
        return []
    return L.spin_rows(vecs, [A.rows for A in M.gen_mats], M.field, M.dim)[0]


def spin_transposed(M: Module, vectors) -> list:
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    return L.spin_rows(vecs, [A.T.rows for A in M.gen_mats], M.field, M.dim)[0]


def is_submodule(M: Module, W) -> bool:
    if not W:
        return True
    K = M.field
    piv = L.pivots_of(W, K)
    return all(L.contains(W, piv, v, K) for A in M.gen_mats for v in L.matmul_rows(W, A.rows, K, M.dim))


def submodule(M: Module, W, name=None) -> Module:
    """The submodule on the RREF rows ``W``; coordinates are the pivot entries."""
    K = M.field
    W, piv = L.rref_rows(list(W), M.dim, K) if W else ([], [])
    k = len(W)
    action = []
    for A in M.action:
        WA = L.matmul_rows(W, A.rows, K, M.dim)
        action.append(L.Mat(K, [[r[p] for p in piv] for r in WA], k))
    return Module(M.alg, action, check=False, name=name, dim=k)


@dataclass
class Quotient:
    module: Module
    cols: list  # non-pivot columns of the submodule: the complement basis
    sub: list
    sub_pivots: list
    field: object = None

    def project(self, v):
        K = self.field
        r = L.reduce_vector(self.sub, self.sub_pivots, v, K)
        if r is None:
            return [K.zero] * len(self.cols)
        return [r[c] for c in self.cols]

    def lift(self, u, ambient_dim):
        K = self.field
        v = [K.zero] * ambient_dim
        for c, x in zip(self.cols, u):
            v[c] = x
        return v


def quotient(M: Module, W, name=None) -> Quotient:
    K = M.field
    W, piv = L.rref_rows(list(W), M.dim, K) if W else ([], [])
    pset = set(piv)
    cols = [c for c in range(M.dim) if c not in pset]
    q = Quotient(None, cols, W, piv, K)
    action = []
    for A in M.action:
        action.append(L.Mat(K, [q.project(A.rows[c]) for c in cols], len(cols)))
    q.module = Module(M.alg, action, check=False, name=name, dim=len(cols))
    return q


def direct_sum(*mods: Module, name=None) -> Module:
    if not mods:
        raise BadParameters("direct sum of nothing")
    alg = mods[0].alg
    for X in mods[1:]:
        if X.alg is not alg:
            raise DifferentAlgebras("summands over different algebras")
    K = alg.field
    dim = sum(X.dim for X in mods)
    action = [L.block_diag(K, [X.action[i] for X in mods]) for i in range(alg.dim)]
    return Module(alg, action, check=False, name=name, dim=dim)


def zero_module(alg: Algebra) -> Module:
    return Module(alg, [L.Mat(alg.field, [], 0) for _ in range(alg.dim)], check=False, dim=0)


# ---------------------------------------------------------------------------
# socle and its filtration
# ---------------------------------------------------------------------------

def socle(M: Module) -> list:
    """``soc(M) = {v : v . rad(E) = 0}`` as RREF rows."""
    if M.dim == 0:
        return []
    rad = M.alg.radical
    if not rad:
        return M.identity_rows()
    K = M.field
    mats = [M.act(r) for r in rad]
    stacked = [sum((X.rows[i] for X in mats), []) for i in range(M.dim)]
    return L.left_kernel(L.Mat(K, stacked, M.dim * len(mats))).rows


def is_semisimple_module(M: Module) -> bool:
    return len(socle(M)) == M.dim


@dataclass
class FiltrationReport:
    module: Module
    chain: list  # RREF bases soc^0 = 0, soc^1, ..., soc^l = M
    layers: list  # Modules soc^i / soc^(i-1)

    @property
    def slg(self) -> int:
        return len(self.layers)

    @property
    def dims(self) -> list:
        return [len(c) for c in self.chain]

    @cached_property
    def semisimplification(self) -> Module:
        if not self.layers:
            return zero_module(self.module.alg)
        return direct_sum(*self.layers, name=f"ss({self.module.name})")


def socle_filtration(M: Module) -> FiltrationReport:
    K = M.field
    chain = [[]]
    layers = []
    while len(chain[-1]) < M.dim:
        q = quotient(M, chain[-1])
        S = socle(q.module)
        layers.append(submodule(q.module, S))
        lifted = [q.lift(v, M.dim) for v in S]
        chain.append(L.span(chain[-1] + lifted, M.dim, K))
    return FiltrationReport(M, chain, layers)


def semisimplify(M: Module) -> Module:
    return socle_filtration(M).semisimplification


# ---------------------------------------------------------------------------
# simplicity
# ---------------------------------------------------------------------------

@dataclass
class SubmoduleSearch:
    """Outcome of a simplicity test: a proper nonzero submodule, or none."""

    sub: list | None
    certified: bool
    method: str

    @property
    def simple(self) -> bool:
        return self.sub is None


def _combine(basis, coeffs, K):
    acc = None
    for c, B in zip(coeffs, basis):
        if c == K.zero:
            continue
        term = B.scale(c)
        acc = term if acc is None else acc + term
    return acc


def _small_combinations(d, K, cap):
    """Integer coefficient vectors by increasing height, up to ``cap`` of them.

    Over infinite fields the useful endomorphisms (those generating a
    splitting subfield) tend to have small coordinates; this makes the search
    independent of the seed.
    """
    from itertools import product
    seen = 0
    for h in (1, 2):
        for cs in product(range(-h, h + 1), repeat=d):
            if max(abs(c) for c in cs) != h or sum(1 for c in cs if c) < 2:
                continue
            # first nonzero coefficient positive: skip negatives of earlier vectors
            if next(c for c in cs if c) < 0:
                continue
            yield [K.from_int(c) for c in cs]
            seen += 1
            if seen >= cap:
                return


def _candidates(basis, K, rng, extra=30, bound=5, systematic=0):
    d = len(basis)
    for i in range(d):
        yield basis[i]
    for i in range(d):
        for j in range(i + 1, min(d, i + 4)):
            yield basis[i] + basis[j]
    if systematic:
        for cs in _small_combinations(d, K, systematic):
            yield _combine(basis, cs, K)
    for _ in range(extra):
        acc = _combine(basis, [_small(K, rng, bound) for _ in range(d)], K)
        if acc is not None:
            yield acc


def _small(K, rng, bound):
    if K.is_finite:
        return K.random(rng)
    return K.from_int(rng.randint(-bound, bound))


def _irreducible_factors(f, K):
    """Distinct monic irreducible factors, or ``None`` if undecidable."""
    if supports_factor(K):
        return [g for g, _ in factor(f, K)]
    if certify_irreducible(f, K) is True:
        return [P.monic(f, K)]
    return None


def _kernel_of_poly(f, Phi: L.Mat):
    K = Phi.field
    X = L.Mat(K, P.eval_matrix(f, Phi.rows, K), Phi.ncols)
    return X, L.left_kernel(X).rows


def _end_split(M: Module, phi: L.Mat):
    """Try to split with one endomorphism; returns ``("sub", rows)``,
    ``("field", degree)`` or ``None`` when undecidable."""
    K = M.field
    mu = L.minpoly(phi)
    facs = _irreducible_factors(mu, K)
    if facs is None:
        return None
    g = facs[0]
    X, ker = _kernel_of_poly(g, phi)
    if len(facs) == 1 and X.is_zero():
        return ("field", len(g) - 1)
    return ("sub", ker)


def _frobenius_fixed_dim(basis, K):
    """Dimension of ``{x : x^q = x}`` in the commutative algebra spanned by ``basis``."""
    d = len(basis)
    flat = [B.flat() for B in basis]
    piv = L.pivots_of(flat, K)

    def coords(X):
        v = X.flat()
        return [v[p] for p in piv]

    rows = []
    for i, B in enumerate(basis):
        Bq = _mat_pow(B, K.q)
        c = coords(Bq)
        c[i] = K.sub(c[i], K.one)
        rows.append(c)
    return d - L.rank(L.Mat(K, rows, d))


def _mat_pow(A: L.Mat, e: int) -> L.Mat:
    R = L.identity(A.field, A.nrows)
    B = A
    while e:
        if e & 1:
            R = R @ B
        e >>= 1
        if e:
            B = B @ B
    return R


def _definite_quaternion(basis, K) -> bool:
    """Over Q: is the trace form ``tr(xy)`` on a 4-dim End of signature (1, 3)?

    The form is symmetric, so its characteristic polynomial is real-rooted and
    Descartes' rule of signs counts positive and negative eigenvalues exactly.
    """
    if K.characteristic != 0 or K.base is not None or len(basis) != 4:
        return False
    G = L.Mat(K, [[sum(((X @ Y).rows[i][i] for i in range(X.nrows)), K.zero) for Y in basis]
                  for X in basis], 4)
    chi = L.charpoly(G)
    if chi[0] == 0:
        return False

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    flipped = [c if k % 2 == 0 else -c for k, c in enumerate(chi)]
    return changes(chi) == 1 and changes(flipped) == 3


def _meataxe(M: Module, rng):
    """Norton-style test over any field where characteristic polynomials can
    be (at least partly) factored.  Returns a SubmoduleSearch or ``None``."""
    K = M.field
    m = M.dim
    A = M.alg
    elems = [A.basis_vector(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            elems.append([K.add(x, y) for x, y in zip(elems[i], elems[j])])
    for _ in range(20):
        elems.append([_small(K, rng, 3) for _ in range(A.dim)])
    for x in elems:
        X = M.act(x)
        facs = _irreducible_factors(L.charpoly(X), K)
        if facs is None:
            continue
        for f in facs:
            Y, N = _kernel_of_poly(f, X)
            if not N:
                continue
            W = spin(M, [N[0]])
            if len(W) < m:
                return SubmoduleSearch(W, True, "spin")
            if len(N) != len(f) - 1:
                continue
            NT = L.left_kernel(Y.T).rows
            WT = spin_transposed(M, [NT[0]])
            if len(WT) < m:
                return SubmoduleSearch(L.kernel(L.Mat(K, WT, m)).rows, True, "norton")
            return SubmoduleSearch(None, True, "norton")
    return None


def find_submodule(M: Module, seed: int = 0) -> SubmoduleSearch:
    """Find a proper nonzero submodule, or certify (where possible) that none exists."""
    K = M.field
    m = M.dim
    rng = random.Random(seed)
    if m == 0:
        raise BadParameters("the zero module is not simple and has no proper submodule")
    if m == 1:
        return SubmoduleSearch(None, True, "dimension")
    if M.alg.radical_supported():
        soc = socle(M)
        if len(soc) < m:
            return SubmoduleSearch(soc, True, "socle")
        res = _semisimple_search(M, rng)
        if res is not None:
            return res
    res = _meataxe(M, rng)
    if res is not None:
        return res
    if isinstance(K, FiniteField) and K.q ** m <= FINITE_LIMIT:
        return _exhaustive_spin(M)
    for i in range(m):
        W = spin(M, [M.identity_rows()[i]])
        if len(W) < m:
            return SubmoduleSearch(W, True, "spin")
    return SubmoduleSearch(None, False, "best-effort")


def _semisimple_search(M: Module, rng):
    """``M`` semisimple: ``M`` is simple iff ``End(M)`` is a division algebra."""
    K = M.field
    basis = hom_space(M, M).basis
    d = len(basis)
    if d == 1:
        return SubmoduleSearch(None, True, "endomorphisms")
    commutative = all(X @ Y == Y @ X for i, X in enumerate(basis) for Y in basis[i + 1:])
    if isinstance(K, FiniteField) and commutative and _frobenius_fixed_dim(basis, K) == 1:
        return SubmoduleSearch(None, True, "endomorphism field")
    if d == 4 and not commutative and _definite_quaternion(basis, K):
        return SubmoduleSearch(None, True, "definite quaternion endomorphisms")
    extra, systematic = 30, 0
    if isinstance(K, FiniteField):
        # End is a product of matrix algebras over finite fields; when it is
        # not a field a singular element exists and random search finds one
        extra = 5000
    elif not commutative:
        systematic = 400
    for phi in _candidates(basis, K, rng, extra=extra, systematic=systematic):
        res = _end_split(M, phi)
        if res is None:
            return None
        kind, val = res
        if kind == "sub":
            return SubmoduleSearch(val, True, "endomorphism kernel")
        if val == d:
            return SubmoduleSearch(None, True, "endomorphism field")
    return None


def _exhaustive_spin(M: Module) -> SubmoduleSearch:
    K = M.field
    m = M.dim
    for v in _projective_points(K, m):
        W = spin(M, [v])
        if len(W) < m:
            return SubmoduleSearch(W, True, "exhaustive spin")
    return SubmoduleSearch(None, True, "exhaustive spin")


def _projective_points(K, m):
    """Vectors of ``K^m`` whose first nonzero entry is 1."""
    from itertools import product
    for lead in range(m):
        for tail in product(range(K.q), repeat=m - lead - 1):
            yield [0] * lead + [1] + list(tail)


def is_simple(M: Module, seed: int = 0):
    """``(simple, certified)``."""
    if M.dim == 0:
        return False, True
    r = find_submodule(M, seed)
    return r.simple, r.certified


# ---------------------------------------------------------------------------
# composition factors and decomposition
# ---------------------------------------------------------------------------

def composition_factors(M: Module, seed: int = 0):
    """List of ``(simple module, certified)`` along some composition series."""
    if M.dim == 0:
        return []
    r = find_submodule(M, seed)
    if r.simple:
        return [(M, r.certified)]
    return composition_factors(submodule(M, r.sub), seed) + \
        composition_factors(quotient(M, r.sub).module, seed)


def composition_length(M: Module, seed: int = 0) -> int:
    return len(composition_factors(M, seed))


@dataclass
class Summand:
    module: Module
    multiplicity: int
    endo_dim: int


@dataclass
class DecompositionReport:
    module: Module
    summands: list
    supported: bool
    of_semisimplification: bool
    certificate: L.Mat | None = None
    certificate_ok: bool = False
    notes: list = dc_field(default_factory=list)

    @property
    def length(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    @property
    def dims(self) -> list:
        return [s.module.dim for s in self.summands]

    @property
    def endo_dims(self) -> list:
        return [s.endo_dim for s in self.summands]

    @property
    def multiplicities(self) -> list:
        return [s.multiplicity for s in self.summands]


def group_isotypic(factors):
    """Group simple modules into isomorphism classes via ``Hom != 0``."""
    classes = []
    for S, cert in factors:
        for c in classes:
            if hom_space(c[0], S).dim:
                c[1] += 1
                c[2] = c[2] and cert
                break
        else:
            classes.append([S, 1, cert])
    return classes


def decompose(M: Module, seed: int = 0) -> DecompositionReport:
    if not M.alg.radical_supported():
        raise UnsupportedField(f"decomposition over {M.field} is not available")
    ss = M
    of_ss = False
    if not is_semisimple_module(M):
        ss = semisimplify(M)
        of_ss = True
    classes = group_isotypic(composition_factors(ss, seed))
    classes.sort(key=lambda c: (c[0].dim, -c[1]))
    summands = [Summand(S, k, end_dim(S)) for S, k, _ in classes]
    supported = all(c[2] for c in classes)
    rep = DecompositionReport(M, summands, supported, of_ss)
    if ss.dim:
        P_, ok = _block_certificate(ss, summands)
        rep.certificate, rep.certificate_ok = P_, ok
    else:
        rep.certificate_ok = True
    return rep


def _block_certificate(M: Module, summands):
    """Change of basis ``P`` (rows = new basis) with ``P rho(e) = D(e) P``,
    ``D`` block diagonal with the simple actions."""
    K = M.field
    rows = []
    blocks = []
    for s in summands:
        H = hom_space(s.module, M)
        for Phi in H.basis:
            test = rows + Phi.rows
            if L.rank(L.Mat(K, test, M.dim)) == len(test):
                rows = test
                blocks.append(s.module)
        if sum(1 for b in blocks if b is s.module) != s.multiplicity:
            return None, False
    if len(rows) != M.dim:
        return None, False
    Pm = L.Mat(K, rows, M.dim)
    ok = all(Pm @ M.action[i] == L.block_diag(K, [B.action[i] for B in blocks]) @ Pm
             for i in range(M.alg.dim))
    return Pm, ok and L.is_invertible(Pm)


# ---------------------------------------------------------------------------
# endomorphism algebra
# ---------------------------------------------------------------------------

def endomorphism_algebra(M: Module, name=None):
    """``End(M)`` with the composition product ``(x y)(v) = x(y(v))``.

    Returns ``(algebra, basis)`` where ``basis[i]`` is the matrix of ``e_i``;
    with maps acting on row vectors the matrix of ``x y`` is ``Phi_y Phi_x``.
    """
    K = M.field
    H = hom_space(M, M)
    basis = H.basis
    d = len(basis)
    if d == 0:
        raise BadParameters("End of the zero module")
    flat = [B.flat() for B in basis]
    piv = L.pivots_of(flat, K)

    def coords(X):
        v = X.flat()
        return [v[p] for p in piv]
    sc = [[coords(basis[j] @ basis[i]) for j in range(d)] for i in range(d)]
    unit = coords(L.identity(K, M.dim))
    alg = Algebra(K, sc, unit, name=name or f"End({M.name})", check=False)
    return alg, basis


# ---------------------------------------------------------------------------
# group-algebra structure: trivial, permutation, tensor, dual
# ---------------------------------------------------------------------------

def _need_group(alg):
    if alg.group is None:
        raise NotAGroupAlgebra(f"{alg.name} is not a group algebra")
    return alg.group


def trivial_module(alg: Algebra) -> Module:
    _need_group(alg)
    K = alg.field
    return Module(alg, [L.Mat(K, [[K.one]], 1) for _ in range(alg.dim)], check=False,
                  name=f"triv({alg.name})")


def character_module(alg: Algebra, values) -> Module:
    """One-dimensional module; ``values[g]`` is the scalar of group element ``g``."""
    _need_group(alg)
    K = alg.field
    return Module(alg, [L.Mat(K, [[K.coerce(v)]], 1) for v in values])


def parse_cycles(text: str, degree: int):
    perm = list(range(degree))
    for cyc in re.findall(r"\(([^()]*)\)", text):
        pts = [int(x) for x in cyc.replace(",", " ").split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return perm


def permutation_module(alg: Algebra, gens, degree=None) -> Module:
    """Permutation module from images of the group generators.

    ``gens[k]`` is an image list or a cycle string for generator ``k``;
    basis vector ``e_i`` is sent to ``e_{pi(i)}``.
    """
    group = _need_group(alg)
    if len(gens) != len(group.generators):
        raise BadParameters(f"need one permutation per generator ({len(group.generators)})")
    if degree is None:
        degree = 1 + max((int(x) for g in gens if isinstance(g, str)
                          for x in re.findall(r"\d+", g)), default=-1)
        degree = max([degree] + [len(g) for g in gens if not isinstance(g, str)])
    perms = [parse_cycles(g, degree) if isinstance(g, str) else list(g) for g in gens]
    K = alg.field

    def pmat(p):
        return L.Mat(K, [[K.one if j == p[i] else K.zero for j in range(degree)] for i in range(degree)],
                     degree)
    gm = [pmat(p) for p in perms]
    action = []
    for word in group.words():
        X = L.identity(K, degree)
        for k in word:
            X = X @ gm[k]
        action.append(X)
    return Module(alg, action, check=True, name="perm")


def tensor_module(M: Module, N: Module) -> Module:
    if M.alg is not N.alg:
        raise DifferentAlgebras("tensor factors over different algebras")
    _need_group(M.alg)
    action = [L.kron(A, B) for A, B in zip(M.action, N.action)]
    return Module(M.alg, action, check=False, name=f"({M.name}(x){N.name})", dim=M.dim * N.dim)


def dual_module(M: Module) -> Module:
    group = _need_group(M.alg)
    action = [M.action[group.inverse(g)].T for g in range(group.order)]
    return Module(M.alg, action, check=False, name=f"{M.name}^*", dim=M.dim)


# ---------------------------------------------------------------------------
# isomorphism of semisimple modules
# ---------------------------------------------------------------------------

def find_isomorphism(M: Module, N: Module, seed: int = 0, tries: int = 2000):
    """An invertible intertwiner ``M -> N`` or ``None``.

    For semisimple modules the dimension test ``dim End M = dim Hom(M, N) =
    dim End N`` decides isomorphism; the witness is then found by random search.
    """
    if M.dim != N.dim:
        return None
    H = hom_space(M, N)
    if M.dim == 0:
        return L.Mat(M.field, [], 0)
    if H.dim == 0:
        return None
    K = M.field
    rng = random.Random(seed)
    for Phi in H.basis:
        if L.is_invertible(Phi):
            return Phi
    for _ in range(tries):
        Phi = H.element([_small(K, rng, 5) for _ in range(H.dim)])
        if L.is_invertible(Phi):
            return Phi
    return None


# ---------------------------------------------------------------------------
# submodule lattices
# ---------------------------------------------------------------------------

LATTICE_LIMIT = 200_000


@dataclass
class Lattice:
    elements: list  # tuples of RREF row tuples, sorted by (dim, rows)
    ambient: int
    field: object

    def __post_init__(self):
        self.elements = sorted(set(self.elements), key=lambda e: (len(e), e))
        self.index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def dims(self):
        return [len(e) for e in self.elements]

    def leq(self, i, j) -> bool:
        A, B = self.elements[i], self.elements[j]
        if len(A) > len(B):
            return False
        if not A:
            return True
        K = self.field
        Bl = [list(r) for r in B]
        piv = L.pivots_of(Bl, K) if Bl else []
        return all(L.contains(Bl, piv, list(v), K) for v in A)

    @cached_property
    def order(self):
        n = len(self.elements)
        return [[self.leq(i, j) for j in range(n)] for i in range(n)]

    def atoms(self):
        return [e for e in self.elements if len(e) and all(
            not len(f) or f == e or not self.leq(self.index[f], self.index[e])
            for f in self.elements if len(f) < len(e))]

    def socle(self):
        rows = [list(r) for a in self.atoms() for r in a]
        return tuple(tuple(r) for r in L.span(rows, self.ambient, self.field))

    def longest_chain(self) -> int:
        """Number of steps in a longest chain ``0 < ... < M``."""
        best = {}
        for i, e in enumerate(self.elements):
            best[i] = 0
            for j in range(i):
                if len(self.elements[j]) < len(e) and self.order[j][i]:
                    best[i] = max(best[i], best[j] + 1)
        return max(best.values()) if best else 0


def _key(rows):
    return tuple(tuple(r) for r in rows)


def submodule_lattice(M: Module, limit: int = LATTICE_LIMIT) -> Lattice:
    """All submodules of a module over a finite field, by closure under
    ``W -> spin(W + v)``."""
    K = M.field
    if not isinstance(K, FiniteField):
        raise UnsupportedField("lattice enumeration needs a finite field")
    if K.q ** M.dim > FINITE_LIMIT:
        raise TooLarge(f"{K.q}^{M.dim} vectors exceed the enumeration bound")
    m = M.dim
    seen = {_key([])}
    frontier = [[]]
    while frontier:
        nxt = []
        for W in frontier:
            piv = L.pivots_of(W, K) if W else []
            pset = set(piv)
            free = [c for c in range(m) if c not in pset]
            for u in _projective_points(K, len(free)):
                v = [0] * m
                for c, x in zip(free, u):
                    v[c] = x
                U = spin(M, W + [v])
                k = _key(U)
                if k not in seen:
                    seen.add(k)
                    nxt.append(U)
                    if len(seen) > limit:
                        raise TooLarge("submodule lattice exceeds the enumeration limit")
        frontier = nxt
    return Lattice(list(seen), m, K)
