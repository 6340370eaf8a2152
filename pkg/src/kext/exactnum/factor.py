"""Polynomial factorisation over the supported tower levels.

Support matrix:

* finite fields -- squarefree decomposition, distinct-degree and
  Cantor-Zassenhaus equal-degree splitting, implemented here;
* ``Q`` -- delegated to sympy's integer factoriser;
* one algebraic step over ``Q`` -- Trager's norm method on top of the ``Q`` case;
* rational function fields over a finite field -- root finding only, enough
  to certify irreducibility in degree <= 3.

Everything else raises :class:`~kext.errors.UnsupportedField`.
"""
from __future__ import annotations

import random
from fractions import Fraction

from ..errors import UnsupportedField
from . import poly as P
from .fields import AlgebraicExtension, FiniteField, RationalFunctionField, Rationals


def is_separable_step(f, K) -> bool:
    """True iff ``gcd(f, f')`` is a nonzero constant."""
    f = P.trim(list(f), K)
    g = P.gcd(f, P.deriv(f, K), K)
    return len(g) == 1


def factor(f, K, seed: int = 0) -> list[tuple[list, int]]:
    """Monic irreducible factors of ``f`` with multiplicities.

    The leading coefficient is dropped; ``prod(g**m) == monic(f)``.
    """
    f = P.monic(P.trim(list(f), K), K)
    if len(f) <= 1:
        return []
    if len(f) == 2:
        return [(f, 1)]
    if isinstance(K, FiniteField):
        return _factor_finite(f, K, random.Random(seed))
    if isinstance(K, Rationals):
        return _factor_rational(f)
    if isinstance(K, AlgebraicExtension) and isinstance(K.base, Rationals):
        return _factor_number_field(f, K)
    raise UnsupportedField(f"no polynomial factorisation over {K}")


def supports_factor(K) -> bool:
    return isinstance(K, (FiniteField, Rationals)) or (
        isinstance(K, AlgebraicExtension) and isinstance(K.base, Rationals))


def certify_irreducible(f, K):
    """``True``/``False`` when decidable, ``None`` otherwise."""
    f = P.monic(P.trim(list(f), K), K)
    if len(f) == 2:
        return True
    if supports_factor(K):
        fs = factor(f, K)
        return len(fs) == 1 and fs[0][1] == 1
    if isinstance(K, RationalFunctionField) and isinstance(K.base, FiniteField) and len(f) <= 4:
        return not function_field_roots(f, K)
    return None


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

def _pth_root_poly(f, K):
    p = K.p
    return P.trim([K.pth_root(f[i]) for i in range(0, len(f), p)], K)


def squarefree_finite(f, K):
    out = []
    if len(f) <= 1:
        return out
    fp = P.deriv(f, K)
    if not fp:
        for g, m in squarefree_finite(_pth_root_poly(f, K), K):
            out.append((g, m * K.p))
        return out
    c = P.gcd(f, fp, K)
    w = P.quo(f, c, K)
    i = 1
    while len(w) > 1:
        y = P.gcd(w, c, K)
        z = P.quo(w, y, K)
        if len(z) > 1:
            out.append((P.monic(z, K), i))
        i += 1
        w = y
        c = P.quo(c, y, K)
    if len(c) > 1:
        for g, m in squarefree_finite(_pth_root_poly(P.monic(c, K), K), K):
            out.append((g, m * K.p))
    return out


def distinct_degree(f, K):
    out = []
    x = [K.zero, K.one]
    h = x
    rest = f
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = P.powmod(h, K.q, rest, K)
        g = P.gcd(rest, P.sub(h, x, K), K)
        if len(g) > 1:
            out.append((g, d))
            rest = P.quo(rest, g, K)
            h = P.rem(h, rest, K)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def equal_degree(f, d, K, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = P.trim([K.random(rng) for _ in range(n)], K)
        if len(r) < 2:
            continue
        if K.p == 2:
            acc = r
            t = r
            for _ in range(K.k * d - 1):
                acc = P.mulmod(acc, acc, f, K)
                t = P.add(t, acc, K)
            g = P.gcd(f, t, K)
        else:
            e = (K.q ** d - 1) // 2
            g = P.gcd(f, P.sub(P.powmod(r, e, f, K), [K.one], K), K)
        if 1 < len(g) < len(f):
            return equal_degree(g, d, K, rng) + equal_degree(P.quo(f, g, K), d, K, rng)


def _factor_finite(f, K, rng):
    out = []
    for g, m in squarefree_finite(f, K):
        for h, d in distinct_degree(g, K):
            for irr in equal_degree(h, d, K, rng):
                out.append((P.monic(irr, K), m))
    return _merge(out)


def _merge(facs):
    acc = {}
    for g, m in facs:
        k = tuple(g)
        acc[k] = acc.get(k, 0) + m
    return sorted(((list(k), m) for k, m in acc.items()), key=lambda t: (len(t[0]), repr(t[0])))


def finite_roots(f, K):
    return [K.neg(g[0]) for g, _ in _factor_finite(P.monic(f, K), K, random.Random(0)) if len(g) == 2]


def random_irreducible(K, n, rng):
    """A random monic irreducible polynomial of degree ``n`` over finite ``K``."""
    while True:
        f = [K.random(rng) for _ in range(n)] + [K.one]
        if f[0] == K.zero:
            continue
        fs = _factor_finite(f, K, rng)
        if len(fs) == 1 and fs[0][1] == 1:
            return f


# ---------------------------------------------------------------------------
# Q and number fields
# ---------------------------------------------------------------------------

def _factor_rational(f):
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f)], x,
                      domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for g, m in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        lead = cs[-1]
        out.append(([c / lead for c in cs], int(m)))
    return _merge(out)


def squarefree_char0(f, K):
    out = []
    fp = P.deriv(f, K)
    b = P.gcd(f, fp, K)
    c = P.quo(f, b, K)
    d = P.sub(P.quo(fp, b, K), P.deriv(c, K), K)
    i = 1
    while len(c) > 1:
        a = P.gcd(c, d, K)
        if len(a) > 1:
            out.append((a, i))
        c = P.quo(c, a, K)
        d = P.sub(P.quo(d, a, K), P.deriv(c, K), K)
        i += 1
    return out


def _norm_poly(g, K):
    """Norm from ``K[x]`` down to ``Q[x]`` as a resultant."""
    import sympy

    x, y = sympy.symbols("x y")
    m = sum(sympy.Rational(c.numerator, c.denominator) * y**i for i, c in enumerate(K.minpoly))
    G = 0
    for j, c in enumerate(g):
        G += sum(sympy.Rational(a.numerator, a.denominator) * y**i for i, a in enumerate(c)) * x**j
    R = sympy.Poly(sympy.resultant(m, G, y), x, domain="QQ")
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(R.all_coeffs())]
    return P.trim(cs, K.base)


def _factor_number_field(f, K):
    Q = K.base
    alpha = K.generator()
    out = []
    for g, mult in squarefree_char0(f, K):
        shifts = [0]
        for s in range(1, 50):
            shifts += [s, -s]
        for s in shifts:
            sa = K.mul(K.from_int(s), alpha)
            gs = P.compose(g, [K.neg(sa), K.one], K)
            N = _norm_poly(gs, K)
            if len(P.gcd(N, P.deriv(N, Q), Q)) == 1:
                break
        else:  # pragma: no cover - the shift search always terminates in practice
            raise UnsupportedField("no squarefree norm found")
        pieces = _factor_rational(N)
        if len(pieces) == 1:
            out.append((P.monic(g, K), mult))
            continue
        rest = gs
        for Ni, _ in pieces:
            h = P.gcd(rest, [K._lift(c) for c in Ni], K)
            if len(h) > 1:
                rest = P.quo(rest, h, K)
                out.append((P.monic(P.compose(h, [sa, K.one], K), K), mult))
    return _merge(out)


# ---------------------------------------------------------------------------
# rational function fields over finite fields
# ---------------------------------------------------------------------------

def function_field_roots(f, K):
    """Roots in ``K = B(t)`` (``B`` finite) of the monic polynomial ``f``."""
    B = K.base
    n = len(f) - 1
    D = [B.one]
    for num, den in f:
        D = P.quo(P.mul(D, list(den), B), P.gcd(D, list(den), B), B) if len(den) > 1 else D
    Dk = (tuple(D), (B.one,))
    # g(y) = D^n f(y/D) has polynomial coefficients and is monic
    g = []
    for i, c in enumerate(f):
        g.append(K.mul(c, K.pow(Dk, n - i)))
    const = list(g[0][0])
    roots = []
    candidates = [[]] if not const else _poly_divisors(const, B)
    for r in candidates:
        val = P.evaluate(g, K._norm(list(r), [B.one]) if r else K.zero, K)
        if val == K.zero:
            roots.append(K.div(K._norm(list(r), [B.one]) if r else K.zero, Dk))
    return roots


def _poly_divisors(c, B):
    facs = _factor_finite(P.monic(c, B), B, random.Random(0))
    divs = [[B.one]]
    for g, m in facs:
        new = []
        for d in divs:
            cur = d
            for _ in range(m + 1):
                new.append(cur)
                cur = P.mul(cur, g, B)
        divs = new
    out = []
    for d in divs:
        for u in range(1, B.q):
            out.append(P.scale(d, u, B))
    return out
