import pytest

from kext import algebra as A
from kext.errors import BadParameters, BadUnit, NotAGroup, NotAssociative
from kext.exactnum.fields import GF, QQ, named_field
from kext.groups import dicyclic, group_names, named_group
from kext.properties import instances as C
from kext.properties.oracles import oracle_radical


def test_group_orders_and_identity():
    for name in group_names():
        G = named_group(name)
        assert G.identity == 0
        for g in range(G.order):
            assert G.table[g][G.inverse(g)] == 0
    assert named_group("Q8").order == 8 and dicyclic(2).order == 8
    assert named_group("A4").order == 12


def test_bad_cayley_table():
    with pytest.raises(NotAGroup):
        A.group_algebra([[0, 1], [0, 1]], QQ())


def test_nonassociative_structure_constants():
    Q = QQ()

    def e(k):
        return [1 if i == k else 0 for i in range(3)]
    # e0 is the unit; e1 e1 = e2, e1 e2 = e0, e2 e1 = 0, e2 e2 = 0
    sc = [[e(0), e(1), e(2)],
          [e(1), e(2), e(0)],
          [e(2), [0, 0, 0], [0, 0, 0]]]
    with pytest.raises(NotAssociative) as info:
        A.build_algebra(Q, sc, [1, 0, 0])
    assert len(info.value.witness) == 3


def test_bad_unit():
    sc = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]  # dual numbers, unit e0
    with pytest.raises(BadUnit):
        A.build_algebra(QQ(), sc, [0, 1])


def test_quaternion_parameters():
    with pytest.raises(BadParameters):
        A.quaternion_algebra(1, 1, GF(2))
    with pytest.raises(BadParameters):
        A.quaternion_algebra(0, 1, QQ())
    H = A.quaternion_algebra(-1, -1, QQ())
    i, j, k = H.basis_vector(1), H.basis_vector(2), H.basis_vector(3)
    assert H.mult(i, j) == k
    assert H.mult(j, i) == [-x for x in k]
    assert H.mult(i, i) == [QQ().from_int(-1), 0, 0, 0]


# --- radicals ---------------------------------------------------------------

@pytest.mark.parametrize("name,dim", [
    ("Q[C3]", 0), ("Q[S3]", 0), ("Q[Q8]", 0),
    ("GF2[C2]", 1), ("GF2[S3]", 1), ("GF2[A4]", 9), ("GF3[S3]", 4), ("GF3[C3]", 2),
    ("GF2[C3]", 0), ("GF3[C2xC2]", 0), ("GF2[C2xC2]", 3),
    ("T2(Q)", 1), ("T3(Q)", 3), ("M2(GF2)", 0), ("Q[x]/(x^3)", 2),
])
def test_radical_dimensions(name, dim):
    # group algebras: dim rad = |G| - dim of the semisimple quotient, read off
    # from the simple modules of G/O_p(G) in the modular case
    assert len(C.get_algebra(name).radical) == dim


def test_radical_known_basis():
    E = C.get_algebra("GF2[C2]")
    assert E.radical == [[1, 1]]
    T = C.get_algebra("T2(Q)")
    # basis E11, E12, E22: the radical is spanned by E12
    assert [[int(x) for x in r] for r in T.radical] == [[0, 1, 0]]


@pytest.mark.parametrize("name", ["GF2[C2]", "GF2[C2xC2]", "GF3[C3]", "T2(GF2)", "L2(GF3)",
                                  "GF2[x]/(x^3)", "GF4[C2]", "GF2[S3]", "T3(GF2)",
                                  "GF2[x]/(x^3+x+1)", "GF2[x]/(x^4+1)", "GF2[C2]xGF4/GF2"])
def test_radical_matches_brute_force(name):
    E = C.get_algebra(name)
    assert E.radical == oracle_radical(E)


def test_radical_powers_reach_zero():
    chain = C.get_algebra("Q[x]/(x^3)").radical_powers()
    assert [len(I) for I in chain] == [2, 1, 0]


def test_radical_over_function_field_is_unsupported():
    from kext.errors import UnsupportedField
    E = C.get_algebra("GF2T[C2]")
    assert not E.radical_supported()
    with pytest.raises(UnsupportedField):
        E.radical


# --- centre, separability, Frobenius ---------------------------------------

@pytest.mark.parametrize("name,classes", [("Q[S3]", 3), ("Q[D4]", 5), ("Q[Q8]", 5),
                                          ("Q[A4]", 4), ("Q[C6]", 6), ("GF2[D5]", 4)])
def test_center_dimension_is_class_number(name, classes):
    assert len(C.get_algebra(name).center) == classes


@pytest.mark.parametrize("name,sep", [
    ("Q[C3]", True), ("GF2[C3]", True), ("GF2[C2]", False), ("T2(Q)", False),
    ("QI/Q", True), ("GF4/GF2", True), ("GF2TS/GF2T", False), ("GF2T[C3]", True),
    ("H(-1,-1)/Q", True), ("M2(GF3)", True), ("Q[x]/(x^2)", False),
])
def test_separability(name, sep):
    assert C.get_algebra(name).is_separable() is sep


@pytest.mark.parametrize("name", ["Q[C3]", "GF2[C3]", "H(-1,-1)/Q", "M2(GF2)", "GF4/GF2"])
def test_separability_idempotent_properties(name):
    E = C.get_algebra(name)
    K, n = E.field, E.dim
    x = E.separability_idempotent()

    def tensor(pairs):
        out = [[K.zero] * n for _ in range(n)]
        for c, u, v in pairs:
            for i in range(n):
                for j in range(n):
                    if u[i] != K.zero and v[j] != K.zero:
                        out[i][j] = K.add(out[i][j], K.mul(c, K.mul(u[i], v[j])))
        return out
    basis = [E.basis_vector(i) for i in range(n)]
    # every basis element (not only generators) commutes with e
    for a in basis:
        left = tensor([(x[i][j], E.mult(a, basis[i]), basis[j]) for i in range(n) for j in range(n)])
        right = tensor([(x[i][j], basis[i], E.mult(basis[j], a)) for i in range(n) for j in range(n)])
        assert left == right
    mu = [K.zero] * n
    for i in range(n):
        for j in range(n):
            prod = E.mult(basis[i], basis[j])
            mu = [K.add(m, K.mul(x[i][j], p)) for m, p in zip(mu, prod)]
    assert mu == list(E.unit)


@pytest.mark.parametrize("name", ["Q[C3]", "GF2[S3]", "H(-1,-1)/Q", "GF2[x]/(x^2)",
                                  "M2(Q)", "GF2T[C2]", "GF2TS/GF2T"])
def test_frobenius_positive(name):
    E = C.get_algebra(name)
    ok, lam = E.is_frobenius()
    assert ok and E.is_frobenius_functional(lam)


def test_frobenius_dual_numbers_functional():
    E = C.get_algebra("GF2[x]/(x^2)")
    ok, lam = E.is_frobenius()
    assert ok and list(lam) == [0, 1]


@pytest.mark.parametrize("name", ["T2(Q)", "L2(Q)", "T3(GF2)", "T2(GF3)"])
def test_triangular_not_frobenius(name):
    ok, lam = C.get_algebra(name).is_frobenius()
    assert not ok and lam is None


def test_opposite_of_upper_triangular():
    T = C.get_algebra("T2(Q)")
    Top = T.opposite()
    assert Top.dim == 3 and len(Top.radical) == 1
    assert not Top.is_commutative


def test_product_and_quotient():
    P = C.get_algebra("Q[C2]xT2(Q)")
    assert P.dim == 5 and len(P.radical) == 1
    Qt = C.get_algebra("T3(Q)/rad^2")
    assert Qt.dim == 5 and len(Qt.radical) == 2


def test_polyquotient_gf4_is_a_field():
    E = C.get_algebra("GF4/GF2")
    assert E.is_commutative and E.is_semisimple() and E.dim == 2
    assert named_field("GF4").q == 2 ** E.dim
