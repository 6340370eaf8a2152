"""Exact fields organised as towers.

A tower starts at ``Q`` or ``GF(p)`` and is extended step by step, either by a
transcendental variable (rational function field) or by a root of a monic
irreducible polynomial over the level below.  Every tower level is a
:class:`Field` object that performs arithmetic on *plain* element values:

* ``Q``                               -> :class:`fractions.Fraction`
* finite levels (``GF(p)`` and any algebraic step over a finite level)
                                      -> ``int`` codes ``0 <= a < q``
* algebraic step over an infinite level -> tuple of ``d`` base elements
* transcendental step                  -> ``(numerator, denominator)`` pair of
  coefficient tuples, denominator monic and coprime to the numerator

All representations are canonical, so ``==`` on element values is field
equality.  Field objects are interned by their structural key, hence two
towers built from the same description are the same object.
"""
from __future__ import annotations

import ast
import operator
from fractions import Fraction
from functools import cached_property

import numpy as np

from ..errors import (
    BadParameters,
    DuplicateVariable,
    NonPrimeCharacteristic,
    ReducibleMinPoly,
)
from . import poly as P

_INTERN: dict = {}

# Full addition/multiplication tables are materialised up to this order;
# compiled kernels only handle fields with tables.
TABLE_LIMIT = 256
FINITE_LIMIT = 1 << 16


def _intern(cls, key, *args):
    obj = _INTERN.get(key)
    if obj is None:
        obj = cls(*args)
        _INTERN[key] = obj
    return obj


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of all tower levels."""

    key: tuple
    characteristic: int
    is_finite = False
    base: "Field | None" = None
    var: "str | None" = None
    verified = True  # irreducibility of the defining polynomial was certified

    # arithmetic -- subclasses bind fast callables to these names
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def from_int(self, n: int):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    # tower structure
    @cached_property
    def levels(self) -> tuple:
        chain = []
        f = self
        while f is not None:
            chain.append(f)
            f = f.base
        return tuple(reversed(chain))

    @property
    def ground(self) -> "Field":
        return self.levels[0]

    @cached_property
    def has_transcendental(self) -> bool:
        return any(isinstance(f, RationalFunctionField) for f in self.levels)

    @property
    def is_perfect(self) -> bool:
        return self.characteristic == 0 or self.is_finite

    def variables(self) -> list[str]:
        return [f.var for f in self.levels[1:]]

    def generator(self):
        raise NotImplementedError(f"{self} has no generator")

    @cached_property
    def _names(self) -> dict:
        return {f.var: self.embed(f.generator(), f) for f in self.levels[1:]}

    def embed(self, x, src: "Field"):
        """Image of an element of the lower tower level ``src`` in ``self``."""
        if src is self:
            return x
        if self.base is None:
            raise BadParameters(f"{src} is not a level of {self}")
        return self._lift(self.base.embed(x, src))

    def _lift(self, x):
        raise NotImplementedError

    def coerce(self, x):
        """Convert user input (int, Fraction, str) into an element."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            if self.characteristic != 0:
                return self.div(self.from_int(x.numerator), self.from_int(x.denominator))
            return self.embed(x, self.ground)
        return x

    def parse(self, text: str):
        """Parse expressions such as ``"3/2"``, ``"w+1"`` or ``"(t^2+1)/t"``."""
        text = str(text).strip().replace("^", "**")
        tree = ast.parse(text, mode="eval")
        return self._eval_ast(tree.body)

    def _eval_ast(self, node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return self.from_int(node.value)
        if isinstance(node, ast.Name):
            try:
                return self._names[node.id]
            except KeyError:
                raise BadParameters(f"unknown variable {node.id!r} in {self}") from None
        if isinstance(node, ast.UnaryOp):
            v = self._eval_ast(node.operand)
            if isinstance(node.op, ast.USub):
                return self.neg(v)
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = node.right
                sign = 1
                if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
                    sign, e = -1, e.operand
                if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                    raise BadParameters("exponents must be integer literals")
                return self.pow(self._eval_ast(node.left), sign * e.value)
            a = self._eval_ast(node.left)
            b = self._eval_ast(node.right)
            ops = {ast.Add: self.add, ast.Sub: self.sub, ast.Mult: self.mul, ast.Div: self.div}
            fn = ops.get(type(node.op))
            if fn is not None:
                return fn(a, b)
        raise BadParameters(f"cannot parse scalar expression: {ast.dump(node)}")

    def format(self, a) -> str:
        raise NotImplementedError

    def random(self, rng, bound: int = 10):
        raise NotImplementedError

    # serialisation of the tower description
    def to_json(self) -> dict:
        ground = self.ground
        base = "Q" if ground.characteristic == 0 else {"GF": ground.characteristic}
        steps = []
        for f in self.levels[1:]:
            if isinstance(f, RationalFunctionField):
                steps.append({"transcendental": f.var})
            else:
                steps.append({"algebraic": {"var": f.var,
                                            "minpoly": [f.base.format(c) for c in f.minpoly]}})
        return {"base": base, "steps": steps}

    def __repr__(self):
        return self.name

    @property
    def name(self) -> str:
        raise NotImplementedError

    def __reduce__(self):
        return (tower_from_json, (self.to_json(),))


# ---------------------------------------------------------------------------
# Q
# ---------------------------------------------------------------------------

class Rationals(Field):
    characteristic = 0

    def __init__(self):
        self.key = ("Q",)
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.add = operator.add
        self.sub = operator.sub
        self.neg = operator.neg
        self.mul = operator.mul
        self.div = operator.truediv

    def inv(self, a):
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def format(self, a):
        return str(a)

    def random(self, rng, bound=10):
        return Fraction(rng.randint(-bound, bound))

    @property
    def name(self):
        return "Q"


def QQ() -> Rationals:
    return _intern(Rationals, ("Q",))


# ---------------------------------------------------------------------------
# finite fields (int codes)
# ---------------------------------------------------------------------------

class FiniteField(Field):
    """Shared machinery of prime fields and finite algebraic steps."""

    is_finite = True
    p: int
    q: int
    k: int  # degree over the prime field

    zero = 0
    one = 1

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.q)

    def random(self, rng, bound=None):
        return rng.randrange(self.q)

    def digits(self, a) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def pth_root(self, a):
        return self.pow(a, self.q // self.p)

    def _lift(self, x):
        return x  # subfield codes coincide with their images

    def embed(self, x, src):
        if src is self or src in self.levels:
            return x
        raise BadParameters(f"{src} is not a level of {self}")

    @cached_property
    def np_tables(self):
        """``(add, mul, neg, inv)`` as int64 arrays, or ``None`` above the table limit."""
        if self.q > TABLE_LIMIT:
            return None
        q = self.q
        add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
        inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
        return add, mul, neg, inv


class PrimeField(FiniteField):
    def __init__(self, p):
        self.key = ("GF", p)
        self.p = self.q = self.characteristic = p
        self.k = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p)

    def format(self, a):
        return str(a)

    @property
    def name(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    return _intern(PrimeField, ("GF", p), p)


class FiniteExtension(FiniteField):
    """``base[var]/(minpoly)`` over a finite level, elements coded as ints.

    The code of ``sum c_i var^i`` is ``sum c_i * base.q**i``, so codes of
    lower tower levels are literally preserved under the inclusion.
    """

    def __init__(self, base, var, minpoly):
        self.base = base
        self.var = var
        self.minpoly = tuple(minpoly)
        self.d = len(minpoly) - 1
        self.key = (base.key, "alg", var, self.minpoly)
        self.p = self.characteristic = base.p
        self.k = base.k * self.d
        self.q = base.q ** self.d
        if self.q > FINITE_LIMIT:
            raise BadParameters(f"finite field of order {self.q} exceeds {FINITE_LIMIT}")
        self._build_tables()

    def coeffs(self, a) -> list:
        bq = self.base.q
        out = []
        for _ in range(self.d):
            out.append(a % bq)
            a //= bq
        return out

    def from_coeffs(self, cs) -> int:
        bq = self.base.q
        a = 0
        for c in reversed(list(cs) + [0] * (self.d - len(cs))):
            a = a * bq + c
        return a

    def _slow_mul(self, a, b):
        B = self.base
        prod = P.mul(P.trim(self.coeffs(a), B), P.trim(self.coeffs(b), B), B)
        return self.from_coeffs(P.rem(prod, list(self.minpoly), B))

    def _build_tables(self):
        q, p = self.q, self.p
        # addition is digitwise mod p
        if p == 2:
            self._add = operator.xor
            self._neg = lambda a: a
        else:
            digits, from_digits = self.digits, self.from_digits

            def _add(a, b):
                return from_digits([(x + y) % p for x, y in zip(digits(a), digits(b))])

            def _neg(a):
                return from_digits([-x % p for x in digits(a)])

            if q <= TABLE_LIMIT:
                at = [[_add(a, b) for b in range(q)] for a in range(q)]
                nt = [_neg(a) for a in range(q)]
                self._add = lambda a, b: at[a][b]
                self._neg = nt.__getitem__
            else:
                self._add, self._neg = _add, _neg
        # multiplication through discrete logarithms of a primitive element
        order = q - 1
        for g in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = 1
            ok = True
            for i in range(1, order):
                x = self._slow_mul(x, g)
                if x == 1 or x == 0:
                    ok = False
                    break
                exp.append(x)
            if ok and self._slow_mul(x, g) == 1:
                break
        else:
            raise ReducibleMinPoly(f"{P.to_str(list(self.minpoly), self.base, self.var)} is not irreducible")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._exp = exp + exp
        self._log = log
        self.primitive = g

    def add(self, a, b):
        return self._add(a, b)

    def neg(self, a):
        return self._neg(a)

    def sub(self, a, b):
        return self._add(a, self._neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def generator(self):
        if self.d == 1:
            return self.base.neg(self.minpoly[0])
        return self.base.q

    def format(self, a):
        return P.to_str(P.trim(self.coeffs(a), self.base), self.base, self.var)

    @property
    def name(self):
        return f"{self.base.name}[{self.var}]"


# ---------------------------------------------------------------------------
# algebraic steps over infinite levels
# ---------------------------------------------------------------------------

class AlgebraicExtension(Field):
    """``base[var]/(minpoly)`` with elements stored as residue tuples."""

    def __init__(self, base, var, minpoly):
        self.base = base
        self.var = var
        self.minpoly = tuple(minpoly)
        self.d = len(minpoly) - 1
        self.key = (base.key, "alg", var, self.minpoly)
        self.characteristic = base.characteristic
        B = base
        self.zero = tuple([B.zero] * self.d)
        self.one = tuple([B.one] + [B.zero] * (self.d - 1))
        # x^(d+i) reduced, for fast multiplication
        m = list(self.minpoly)
        red = []
        cur = [B.zero] * self.d + [B.one]
        for _ in range(self.d - 1):
            r = P.rem(cur, m, B)
            red.append(r + [B.zero] * (self.d - len(r)))
            cur = [B.zero] + cur
        self._red = red

    def _pad(self, f):
        return tuple(f) + (self.base.zero,) * (self.d - len(f))

    def add(self, a, b):
        ad = self.base.add
        return tuple(ad(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sb = self.base.sub
        return tuple(sb(x, y) for x, y in zip(a, b))

    def neg(self, a):
        ng = self.base.neg
        return tuple(ng(x) for x in a)

    def mul(self, a, b):
        B = self.base
        z = B.zero
        d = self.d
        prod = [z] * (2 * d - 1)
        badd, bmul = B.add, B.mul
        for i, x in enumerate(a):
            if x == z:
                continue
            for j, y in enumerate(b):
                if y != z:
                    prod[i + j] = badd(prod[i + j], bmul(x, y))
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c == z:
                continue
            r = self._red[k - d]
            for i in range(d):
                if r[i] != z:
                    out[i] = badd(out[i], bmul(c, r[i]))
        return tuple(out)

    def inv(self, a):
        B = self.base
        f = P.trim(list(a), B)
        if not f:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = P.xgcd(f, list(self.minpoly), B)
        if len(g) != 1:
            raise ReducibleMinPoly(f"zero divisor found in {self}")
        return self._pad(s)

    def from_int(self, n):
        return self._lift(self.base.from_int(n))

    def _lift(self, x):
        return (x,) + (self.base.zero,) * (self.d - 1)

    def generator(self):
        if self.d == 1:
            return (self.base.neg(self.minpoly[0]),)
        return self._pad([self.base.zero, self.base.one])

    def format(self, a):
        return P.to_str(P.trim(list(a), self.base), self.base, self.var)

    def random(self, rng, bound=10):
        return tuple(self.base.random(rng, bound) for _ in range(self.d))

    @property
    def name(self):
        return f"{self.base.name}[{self.var}]"


# ---------------------------------------------------------------------------
# transcendental steps
# ---------------------------------------------------------------------------

class RationalFunctionField(Field):
    """``base(var)``; elements are reduced fractions with monic denominator."""

    def __init__(self, base, var):
        self.base = base
        self.var = var
        self.key = (base.key, "trans", var)
        self.characteristic = base.characteristic
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))

    def _norm(self, num, den):
        B = self.base
        if not num:
            return self.zero
        if len(den) > 1:
            g = P.gcd(num, den, B)
            if len(g) > 1:
                num = P.quo(num, g, B)
                den = P.quo(den, g, B)
        c = den[-1]
        if c != B.one:
            ic = B.inv(c)
            num = [B.mul(ic, x) for x in num]
            den = [B.mul(ic, x) for x in den]
        return (tuple(num), tuple(den))

    def add(self, a, b):
        B = self.base
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            return self._norm(P.add(list(an), list(bn), B), list(ad))
        num = P.add(P.mul(list(an), list(bd), B), P.mul(list(bn), list(ad), B), B)
        return self._norm(num, P.mul(list(ad), list(bd), B))

    def neg(self, a):
        return (tuple(self.base.neg(x) for x in a[0]), a[1])

    def mul(self, a, b):
        B = self.base
        if not a[0] or not b[0]:
            return self.zero
        return self._norm(P.mul(list(a[0]), list(b[0]), B), P.mul(list(a[1]), list(b[1]), B))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero")
        return self._norm(list(a[1]), list(a[0]))

    def from_int(self, n):
        return self._lift(self.base.from_int(n))

    def _lift(self, x):
        if x == self.base.zero:
            return self.zero
        return ((x,), (self.base.one,))

    def generator(self):
        B = self.base
        return ((B.zero, B.one), (B.one,))

    def format(self, a):
        B = self.base
        num = P.to_str(list(a[0]), B, self.var)
        if a[1] == (B.one,):
            return num
        den = P.to_str(list(a[1]), B, self.var)
        if any(ch in num[1:] for ch in "+-"):
            num = f"({num})"
        if any(ch in den for ch in "+-*"):
            den = f"({den})"
        return f"{num}/{den}"

    def random(self, rng, bound=10, degree=2):
        B = self.base
        num = P.trim([B.random(rng, bound) for _ in range(degree + 1)], B)
        return self._norm(num, [B.one])

    @property
    def name(self):
        return f"{self.base.name}({self.var})"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def transcendental(base: Field, var: str) -> RationalFunctionField:
    if var in base.variables():
        raise DuplicateVariable(f"variable {var!r} already used in {base}")
    return _intern(RationalFunctionField, (base.key, "trans", var), base, var)


def algebraic(base: Field, var: str, minpoly, *, check: bool = True) -> Field:
    """Adjoin a root ``var`` of the monic polynomial ``minpoly`` to ``base``.

    ``minpoly`` lists coefficients from the constant term up; entries may be
    strings, ints or elements of ``base``.
    """
    if var in base.variables():
        raise DuplicateVariable(f"variable {var!r} already used in {base}")
    m = P.trim([base.coerce(c) for c in minpoly], base)
    if len(m) < 2:
        raise BadParameters("minimal polynomial must have degree >= 1")
    if m[-1] != base.one:
        raise BadParameters("minimal polynomial must be monic")
    m = tuple(m)
    key = (base.key, "alg", var, m)
    if key in _INTERN:
        return _INTERN[key]
    verified = False
    if check:
        from .factor import certify_irreducible
        verified = certify_irreducible(list(m), base)
        if verified is False:
            raise ReducibleMinPoly(f"{P.to_str(list(m), base, 'x')} is reducible over {base}")
        verified = verified is True
    cls = FiniteExtension if base.is_finite else AlgebraicExtension
    field = _intern(cls, key, base, var, m)
    field.verified = verified and base.verified
    return field


def tower_build(base, steps=()) -> Field:
    """Build a tower from ``base`` (``"Q"``, ``("GF", p)`` or a prime ``p``)
    and a sequence of steps ``("transcendental", var)`` or
    ``("algebraic", var, minpoly)``."""
    if isinstance(base, Field):
        F = base
    elif base in ("Q", "QQ"):
        F = QQ()
    elif isinstance(base, int):
        F = GF(base)
    elif isinstance(base, (tuple, list)) and len(base) == 2 and base[0] == "GF":
        F = GF(int(base[1]))
    else:
        raise BadParameters(f"unknown base field {base!r}")
    for step in steps:
        kind = step[0]
        if kind == "transcendental":
            F = transcendental(F, step[1])
        elif kind == "algebraic":
            F = algebraic(F, step[1], step[2])
        else:
            raise BadParameters(f"unknown tower step {step!r}")
    return F


def tower_from_json(obj) -> Field:
    base = obj.get("base", "Q")
    if isinstance(base, dict):
        base = ("GF", int(base["GF"]))
    steps = []
    for st in obj.get("steps", []):
        if "transcendental" in st:
            steps.append(("transcendental", st["transcendental"]))
        elif "algebraic" in st:
            a = st["algebraic"]
            steps.append(("algebraic", a["var"], a["minpoly"]))
        else:
            raise BadParameters(f"bad tower step {st!r}")
    return tower_build(base, steps)


# named towers used by the catalog and the command line
def named_field(name: str) -> Field:
    table = {
        "Q": lambda: QQ(),
        "GF2": lambda: GF(2),
        "GF3": lambda: GF(3),
        "GF4": lambda: algebraic(GF(2), "w", [1, 1, 1]),
        "GF16": lambda: algebraic(named_field("GF4"), "u", ["w", 1, 1]),
        "GF9": lambda: algebraic(GF(3), "i", [1, 0, 1]),
        "QI": lambda: algebraic(QQ(), "i", [1, 0, 1]),
        "QW": lambda: algebraic(QQ(), "w", [1, 1, 1]),
        "GF2T": lambda: transcendental(GF(2), "t"),
        "GF2TS": lambda: algebraic(named_field("GF2T"), "s", ["t", 0, 1]),
    }
    aliases = {"Q(i)": "QI", "Q(w)": "QW", "GF(2)": "GF2", "GF(3)": "GF3", "GF(4)": "GF4",
               "GF(9)": "GF9", "GF(16)": "GF16", "GF2(t)": "GF2T", "GF2(t)(s)": "GF2TS",
               "GF(2)(t)": "GF2T", "GF(2)(t)(s)": "GF2TS"}
    name = aliases.get(name, name)
    if name not in table:
        raise BadParameters(f"unknown named field {name!r}")
    return table[name]()


def is_subtower(small: Field, large: Field) -> bool:
    return small in large.levels
