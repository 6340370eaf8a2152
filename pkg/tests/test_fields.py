import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kext.errors import DuplicateVariable, NonPrimeCharacteristic, ReducibleMinPoly
from kext.exactnum import poly as P
from kext.exactnum.factor import (certify_irreducible, factor, is_separable_step,
                                  random_irreducible)
from kext.exactnum.fields import GF, QQ, algebraic, named_field, transcendental, tower_from_json

FIELD_NAMES = ["Q", "GF2", "GF3", "GF4", "GF9", "GF16", "QI", "QW", "GF2T", "GF2TS"]


def _elems(K, seed, n=3):
    rng = random.Random(seed)
    return [K.random(rng, 4) for _ in range(n)]


@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(FIELD_NAMES), seed=st.integers(0, 10 ** 6))
def test_field_axioms(name, seed):
    K = named_field(name)
    a, b, c = _elems(K, seed)
    assert K.add(a, b) == K.add(b, a)
    assert K.mul(a, b) == K.mul(b, a)
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.sub(K.add(a, b), b) == a
    if a != K.zero:
        assert K.mul(a, K.inv(a)) == K.one


def test_finite_field_sizes():
    assert GF(2).q == 2 and named_field("GF4").q == 4
    assert named_field("GF16").q == 16 and named_field("GF9").q == 9


def test_gf4_generator_satisfies_minpoly():
    K = named_field("GF4")
    w = K.generator()
    # w^2 + w + 1 = 0
    assert K.add(K.add(K.mul(w, w), w), K.one) == K.zero
    assert K.pow(w, 3) == K.one


def test_gf16_multiplicative_group_is_cyclic_of_order_15():
    K = named_field("GF16")
    orders = set()
    for a in range(1, 16):
        e = 1
        while K.pow(a, e) != K.one:
            e += 1
        orders.add(e)
    assert max(orders) == 15
    assert orders <= {1, 3, 5, 15}


def test_subfield_codes_are_preserved():
    GF4, GF16 = named_field("GF4"), named_field("GF16")
    w = GF4.generator()
    assert GF16.embed(w, GF4) == w
    assert GF16.mul(GF16.embed(w, GF4), GF16.embed(w, GF4)) == GF4.mul(w, w)


def test_parse_and_format_round_trip():
    K = named_field("QI")
    x = K.parse("1/2 + 3*i")
    assert K.parse(K.format(x)) == x
    assert K.mul(K.parse("i"), K.parse("i")) == K.from_int(-1)


def test_function_field_normal_form():
    F = named_field("GF2T")
    t = F.generator()
    x = F.div(F.mul(t, t), t)
    assert x == t
    assert F.inv(F.inv(t)) == t


def test_inseparable_tower_step():
    Fp = named_field("GF2TS")
    s = Fp.generator()
    t = Fp.embed(named_field("GF2T").generator(), named_field("GF2T"))
    assert Fp.mul(s, s) == t


def test_rationals_coerce():
    assert QQ().coerce("3/4") == Fraction(3, 4)


def test_non_prime_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        GF(4)


def test_reducible_minpoly_rejected():
    with pytest.raises(ReducibleMinPoly):
        algebraic(QQ(), "a", [-1, 0, 1])


def test_duplicate_variable_rejected():
    with pytest.raises(DuplicateVariable):
        transcendental(named_field("GF2T"), "t")


def test_tower_json_round_trip():
    for name in FIELD_NAMES:
        K = named_field(name)
        assert tower_from_json(K.to_json()) is K


# --- polynomials and factorisation -----------------------------------------

def test_separability_of_steps():
    F = named_field("GF2T")
    t = F.generator()
    assert not is_separable_step([t, F.zero, F.one], F)  # x^2 - t
    Q = QQ()
    assert is_separable_step([Q.one, Q.zero, Q.one], Q)
    G = GF(2)
    assert not is_separable_step([1, 0, 1], G)  # (x + 1)^2


def _product(facs, K):
    out = [K.one]
    for g, m in facs:
        out = P.mul(out, P.power(g, m, K), K)
    return out


@settings(max_examples=30, deadline=None)
@given(name=st.sampled_from(["GF2", "GF3", "GF4", "GF9", "Q", "QI"]),
       seed=st.integers(0, 10 ** 6), deg=st.integers(1, 6))
def test_factor_round_trip(name, seed, deg):
    K = named_field(name)
    rng = random.Random(seed)
    f = P.trim([K.random(rng, 3) for _ in range(deg)] + [K.one], K)
    facs = factor(f, K)
    assert _product(facs, K) == P.monic(f, K)
    for g, _ in facs:
        assert certify_irreducible(g, K) is True


def test_factor_known_values():
    Q = QQ()
    # x^4 - 1 = (x - 1)(x + 1)(x^2 + 1) over Q
    facs = factor([Q.from_int(c) for c in (-1, 0, 0, 0, 1)], Q)
    assert sorted(len(g) - 1 for g, _ in facs) == [1, 1, 2]
    # x^2 + 1 splits over Q(i)
    QI = named_field("QI")
    facs = factor([QI.one, QI.zero, QI.one], QI)
    assert [len(g) - 1 for g, _ in facs] == [1, 1]
    # x^2 + x + 1 splits over GF(4) but not GF(2)
    assert len(factor([1, 1, 1], GF(2))) == 1
    GF4 = named_field("GF4")
    assert len(factor([1, 1, 1], GF4)) == 2


def test_function_field_irreducibility_certificate():
    F = named_field("GF2T")
    t = F.generator()
    assert certify_irreducible([t, F.zero, F.one], F) is True  # no square root of t
    t2 = F.mul(t, t)
    assert certify_irreducible([t2, F.zero, F.one], F) is False  # (x + t)^2


def test_random_irreducible_is_irreducible():
    K = GF(3)
    f = random_irreducible(K, 5, random.Random(1))
    assert len(f) == 6 and certify_irreducible(f, K) is True
