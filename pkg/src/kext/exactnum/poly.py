"""Dense univariate polynomials over a field.

Polynomials are plain lists of field elements, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Every function takes the
coefficient field ``K`` explicitly, in the style of a computer-algebra
"domain": ``K.add``, ``K.mul`` and friends do the scalar work.
"""
from __future__ import annotations

from dataclasses import dataclass


def trim(f, K):
    z = K.zero
    n = len(f)
    while n and f[n - 1] == z:
        n -= 1
    return f[:n] if n != len(f) else f


def degree(f):
    return len(f) - 1


def lc(f, K):
    return f[-1] if f else K.zero


def add(f, g, K):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return trim(out, K)


def neg(f, K):
    return [K.neg(c) for c in f]


def sub(f, g, K):
    return add(f, neg(g, K), K)


def scale(f, c, K):
    if c == K.zero:
        return []
    return trim([K.mul(c, a) for a in f], K)


def mul(f, g, K):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    z = K.zero
    for i, a in enumerate(f):
        if a == z:
            continue
        for j, b in enumerate(g):
            if b != z:
                out[i + j] = K.add(out[i + j], K.mul(a, b))
    return trim(out, K)


def monomial(c, k, K):
    if c == K.zero:
        return []
    return [K.zero] * k + [c]


def divmod_(f, g, K):
    """Quotient and remainder of ``f`` by nonzero ``g``."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return [], list(f)
    r = list(f)
    inv_lc = K.inv(g[-1])
    q = [K.zero] * (len(f) - dg)
    z = K.zero
    for k in range(len(f) - 1, dg - 1, -1):
        c = r[k]
        if c == z:
            continue
        c = K.mul(c, inv_lc)
        q[k - dg] = c
        for j in range(dg + 1):
            if g[j] != z:
                r[k - dg + j] = K.sub(r[k - dg + j], K.mul(c, g[j]))
    return trim(q, K), trim(r[:dg], K)


def rem(f, g, K):
    return divmod_(f, g, K)[1]


def quo(f, g, K):
    return divmod_(f, g, K)[0]


def monic(f, K):
    if not f:
        return []
    c = f[-1]
    if c == K.one:
        return list(f)
    ic = K.inv(c)
    return [K.mul(ic, a) for a in f]


def gcd(f, g, K):
    """Monic greatest common divisor (``[]`` only if both are zero)."""
    while g:
        f, g = g, rem(f, g, K)
    return monic(f, K)


def xgcd(f, g, K):
    """Return ``(d, s, t)`` with ``s*f + t*g == d`` and ``d`` monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = divmod_(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, K), K)
        t0, t1 = t1, sub(t0, mul(q, t1, K), K)
    if not r0:
        return [], [], []
    c = K.inv(r0[-1])
    return scale(r0, c, K), scale(s0, c, K), scale(t0, c, K)


def deriv(f, K):
    return trim([K.mul(K.from_int(i), f[i]) for i in range(1, len(f))], K)


def evaluate(f, x, K):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def mulmod(f, g, m, K):
    return rem(mul(f, g, K), m, K)


def powmod(f, e, m, K):
    result = [K.one]
    base = rem(f, m, K)
    while e:
        if e & 1:
            result = mulmod(result, base, m, K)
        e >>= 1
        if e:
            base = mulmod(base, base, m, K)
    return rem(result, m, K)


def power(f, e, K):
    result = [K.one]
    base = list(f)
    while e:
        if e & 1:
            result = mul(result, base, K)
        e >>= 1
        if e:
            base = mul(base, base, K)
    return result


def compose(f, g, K):
    """``f(g(x))``."""
    acc = []
    for c in reversed(f):
        acc = add(mul(acc, g, K), [c] if c != K.zero else [], K)
    return acc


def map_coeffs(f, fn, K):
    return trim([fn(c) for c in f], K)


def is_constant(f):
    return len(f) <= 1


def from_roots(roots, K):
    out = [K.one]
    for r in roots:
        out = mul(out, [K.neg(r), K.one], K)
    return out


def eval_matrix(f, A, K):
    """Evaluate ``f`` at the square matrix ``A`` (list of rows) by Horner."""
    n = len(A)
    acc = [[K.zero] * n for _ in range(n)]
    for c in reversed(f):
        # acc = acc*A + c*I
        new = [[K.zero] * n for _ in range(n)]
        z = K.zero
        for i in range(n):
            row = acc[i]
            out = new[i]
            for k in range(n):
                a = row[k]
                if a == z:
                    continue
                Ak = A[k]
                for j in range(n):
                    b = Ak[j]
                    if b != z:
                        out[j] = K.add(out[j], K.mul(a, b))
            out[i] = K.add(out[i], c)
        acc = new
    return acc


def to_str(f, K, var="x"):
    """Human-readable form, highest degree first."""
    if not f:
        return "0"
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if c == K.zero:
            continue
        cs = K.format(c)
        composite = any(ch in cs[1:] for ch in "+-")
        if k == 0:
            terms.append(cs)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(f"({cs})*{mono}" if composite else f"{cs}*{mono}")
    return "+".join(terms).replace("+-", "-")


@dataclass(frozen=True)
class Poly:
    """A univariate polynomial bound to its coefficient field.

    ``coeffs`` run from the constant term upward.  This is the public face of
    the list-based helpers above; arithmetic operators delegate to them.
    """

    field: object
    coeffs: tuple
    var: str = "x"

    @classmethod
    def make(cls, field, coeffs, var="x"):
        cs = [field.coerce(c) for c in coeffs]
        return cls(field, tuple(trim(cs, field)), var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def _wrap(self, cs):
        return Poly(self.field, tuple(cs), self.var)

    def __add__(self, other):
        return self._wrap(add(list(self.coeffs), list(other.coeffs), self.field))

    def __sub__(self, other):
        return self._wrap(sub(list(self.coeffs), list(other.coeffs), self.field))

    def __mul__(self, other):
        return self._wrap(mul(list(self.coeffs), list(other.coeffs), self.field))

    def __divmod__(self, other):
        q, r = divmod_(list(self.coeffs), list(other.coeffs), self.field)
        return self._wrap(q), self._wrap(r)

    def __pow__(self, e):
        return self._wrap(power(list(self.coeffs), e, self.field))

    def monic(self):
        return self._wrap(monic(list(self.coeffs), self.field))

    def derivative(self):
        return self._wrap(deriv(list(self.coeffs), self.field))

    def gcd(self, other):
        return self._wrap(gcd(list(self.coeffs), list(other.coeffs), self.field))

    def __call__(self, x):
        return evaluate(list(self.coeffs), x, self.field)

    def __str__(self):
        return to_str(list(self.coeffs), self.field, self.var)

    __repr__ = __str__
