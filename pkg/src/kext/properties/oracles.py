"""Brute-force oracles that share as little code as possible with the engine.

They enumerate instead of reasoning, so they only apply to tiny instances over
finite fields, and refuse (``TooLarge``) otherwise.
"""
from __future__ import annotations

from itertools import combinations, product

from ..errors import TooLarge, UnsupportedField
from ..exactnum.fields import FINITE_LIMIT, FiniteField
from ..modules import LATTICE_LIMIT, Module

ORACLE_LIMIT = LATTICE_LIMIT


def _require_finite(K, dim):
    if not isinstance(K, FiniteField):
        raise UnsupportedField("brute-force oracles need a finite field")
    if K.q ** dim > FINITE_LIMIT:
        raise TooLarge(f"{K.q}^{dim} exceeds the oracle bound")


def gaussian_binomial(m: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def all_subspaces(K, m: int):
    """Every subspace of ``K^m`` in reduced row echelon form (tuples of rows).

    Pivot sets are chosen first; the free entries of each row are the columns to
    the right of its pivot that are not themselves pivots.
    """
    _require_finite(K, m)
    total = sum(gaussian_binomial(m, k, K.q) for k in range(m + 1))
    if total > ORACLE_LIMIT:
        raise TooLarge(f"{total} subspaces exceed the oracle limit")
    elems = list(K.elements())
    for k in range(m + 1):
        for piv in combinations(range(m), k):
            pset = set(piv)
            slots = [(r, c) for r, p in enumerate(piv) for c in range(p + 1, m) if c not in pset]
            for values in product(elems, repeat=len(slots)):
                rows = [[K.zero] * m for _ in range(k)]
                for r, p in enumerate(piv):
                    rows[r][p] = K.one
                for (r, c), x in zip(slots, values):
                    rows[r][c] = x
                yield tuple(tuple(r) for r in rows)


def _in_span(rows, v, K):
    """Membership test by explicit elimination against an RREF basis."""
    v = list(v)
    for r in rows:
        p = next(i for i, x in enumerate(r) if x != K.zero)
        c = v[p]
        if c != K.zero:
            v = [K.sub(a, K.mul(c, b)) for a, b in zip(v, r)]
    return all(x == K.zero for x in v)


def _apply(v, A, K):
    out = [K.zero] * A.ncols
    for x, row in zip(v, A.rows):
        if x != K.zero:
            out = [K.add(o, K.mul(x, a)) for o, a in zip(out, row)]
    return out


def oracle_submodule_lattice(M: Module) -> list:
    """All subspaces of ``M`` stable under every action matrix (not just generators)."""
    K = M.field
    out = []
    for W in all_subspaces(K, M.dim):
        if all(_in_span(W, _apply(w, A, K), K) for A in M.action for w in W):
            out.append(W)
    return sorted(out, key=lambda e: (len(e), e))


def oracle_socle(M: Module, lattice=None) -> tuple:
    """Sum of the minimal nonzero submodules, from the lattice alone."""
    K = M.field
    subs = lattice if lattice is not None else oracle_submodule_lattice(M)
    nonzero = [W for W in subs if W]
    minimal = [W for W in nonzero
               if not any(len(U) < len(W) and all(_in_span(W, u, K) for u in U) for U in nonzero)]
    rows = []
    for W in minimal:
        for w in W:
            if not _in_span(_rref(rows, K), w, K):
                rows.append(list(w))
    return tuple(tuple(r) for r in _rref(rows, K))


def _rref(rows, K):
    rows = [list(r) for r in rows]
    if not rows:
        return []
    m = len(rows[0])
    out, r = rows, 0
    for c in range(m):
        p = next((i for i in range(r, len(out)) if out[i][c] != K.zero), None)
        if p is None:
            continue
        out[r], out[p] = out[p], out[r]
        inv = K.inv(out[r][c])
        out[r] = [K.mul(inv, x) for x in out[r]]
        for i in range(len(out)):
            if i != r and out[i][c] != K.zero:
                f = out[i][c]
                out[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(out[i], out[r])]
        r += 1
    return out[:r]


def oracle_longest_chain(lattice, K) -> int:
    """Length of a longest chain of submodules, by dynamic programming on inclusion."""
    best = []
    for i, W in enumerate(lattice):
        b = 0
        for j in range(i):
            U = lattice[j]
            if len(U) < len(W) and all(_in_span(W, u, K) for u in U):
                b = max(b, best[j] + 1)
        best.append(b)
    return max(best) if best else 0


def oracle_radical(E) -> list:
    """``rad(E) = {x : xy nilpotent for every y}`` by enumeration of ``E``."""
    K = E.field
    _require_finite(K, E.dim)
    elems = [list(v) for v in product(list(K.elements()), repeat=E.dim)]

    def nilpotent(x):
        y = x
        for _ in range(E.dim + 1):
            if all(c == K.zero for c in y):
                return True
            y = E.mult(y, x)
        return all(c == K.zero for c in y)
    members = [x for x in elems if all(nilpotent(E.mult(x, y)) for y in elems)]
    return [list(r) for r in _rref(members, K)]


def oracle_hom_dim(M: Module, N: Module) -> int:
    """Hom dimension by counting intertwiners over a finite field: ``log_q #Hom``."""
    K = M.field
    _require_finite(K, M.dim * N.dim)
    elems = list(K.elements())
    count = 0
    for entries in product(elems, repeat=M.dim * N.dim):
        Phi = [list(entries[a * N.dim:(a + 1) * N.dim]) for a in range(M.dim)]
        ok = True
        for A, B in zip(M.action, N.action):
            lhs = [_apply(A.rows[a], _as_mat(Phi, N.dim), K) for a in range(M.dim)]
            rhs = [_apply(Phi[a], B, K) for a in range(M.dim)]
            if lhs != rhs:
                ok = False
                break
        count += ok
    d = 0
    while K.q ** d < count:
        d += 1
    return d


class _as_mat:
    def __init__(self, rows, ncols):
        self.rows, self.ncols = rows, ncols
