import pytest

from kext import modules as MD
from kext import scalarext as SX
from kext import serialize as S
from kext.errors import NotSimple
from kext.exactnum import linalg as L
from kext.exactnum.fields import named_field
from kext.properties import instances as C
from kext.properties.checks import insep_instance


def inc(a, b):
    return SX.inclusion(named_field(a), named_field(b))


def test_extended_algebra_keeps_structure_constants():
    E = C.get_algebra("Q[S3]")
    Ep = SX.extend_algebra(E, inc("Q", "QW"))
    assert Ep.dim == E.dim and Ep.field is named_field("QW")
    assert len(Ep.center) == len(E.center)


@pytest.mark.parametrize("alg,a,b", [("GF2[S3]", "GF2", "GF4"), ("T2(Q)", "Q", "QI"),
                                     ("GF3[S3]", "GF3", "GF9"), ("Q[C3]", "Q", "QW")])
def test_full_faithfulness_on_regular_and_trivial(alg, a, b):
    R = C.regular(alg)
    M = C.trivial(alg) if C.get_algebra(alg).group is not None else R
    for X, Y in [(R, R), (R, M), (M, R)]:
        rep = SX.check_relative_full_faithfulness(X, Y, inc(a, b))
        assert rep.passed, rep.to_json()


def test_exactness_preserves_rank():
    K = named_field("GF2")
    Phi = L.Mat.parse(K, [[1, 1, 0], [0, 1, 1]])
    assert SX.check_exactness(Phi, inc("GF2", "GF16"))


def test_split_gf2_c3_simple_over_gf4():
    Sm = S.load_module("catalog:gf2c3_simple2")
    rep = SX.split_simple(Sm, inc("GF2", "GF4"))
    out = rep.to_json()
    assert out["length_tS"] == out["length_end"] == 2
    assert [s["dim"] for s in out["summands"]] == [1, 1]
    assert rep.consistent and rep.semisimple


def _cyclic_idempotents(Ep, K):
    # e_k = (1/3) sum_j w^(-jk) g^j in K[C3], basis ordered by powers of g
    w = K.generator()
    third = K.inv(K.from_int(3))
    out = []
    for k in range(3):
        e = [K.mul(third, K.pow(w, (-j * k) % 3)) for j in range(3)]
        out.append(e)
    return out


def test_split_q_c3_over_qw_with_character_idempotents():
    QW = named_field("QW")
    S2 = C.simples("Q[C3]")[1]
    assert S2.dim == 2
    rep = SX.split_simple(S2, inc("Q", "QW"))
    assert rep.length_tS == rep.length_end == 2
    tS = rep.extended
    Ep = tS.alg
    idem = _cyclic_idempotents(Ep, QW)
    # orthogonal idempotents summing to the unit
    total = [QW.zero] * 3
    for i, e in enumerate(idem):
        assert Ep.mult(e, e) == e
        for j, f in enumerate(idem):
            if i != j:
                assert all(x == QW.zero for x in Ep.mult(e, f))
        total = [QW.add(x, y) for x, y in zip(total, e)]
    assert total == list(Ep.unit)
    # t(S2) carries the two nontrivial characters, each once
    ranks = [L.rank(tS.act(e)) for e in idem]
    assert ranks == [0, 1, 1]


def test_split_quaternions_over_qi():
    rep = SX.split_simple(C.regular("H(-1,-1)/Q"), inc("Q", "QI"))
    assert rep.end_dim_small == rep.end_dim_large == 4
    assert rep.semisimple and rep.length_tS == 2 == rep.length_end
    assert [(s.module.dim, s.multiplicity) for s in rep.decomposition.summands] == [(2, 2)]


def test_split_requires_simple():
    with pytest.raises(NotSimple):
        SX.split_simple(C.regular("Q[C3]"), inc("Q", "QW"))


def test_inseparable_witness():
    F, Fp, i, Sx = insep_instance()
    rep = SX.split_simple(Sx, i)
    assert rep.semisimple is False and rep.length_tS is None
    assert rep.witness["z"] == ["s", "1"] and rep.witness["power"] == 2
    Ep = rep.extended.alg
    z = Ep.parse_element(rep.witness["z"])
    assert any(x != Fp.zero for x in z)
    assert all(x == Fp.zero for x in Ep.mult(z, z))


def test_no_witness_for_semisimple_algebra():
    assert SX.nilpotent_central_witness(C.get_algebra("Q[C3]")) is None
    assert SX.nilpotent_central_witness(C.get_algebra("GF2[C3]")) is None


def test_ideal_lattice_gf2_c3():
    Sm = S.load_module("catalog:gf2c3_simple2")
    rep = SX.ideal_subobject_check(Sm, inc("GF2", "GF4"))
    assert rep.passed
    assert rep.dims == {"ideals": 4, "submodules": 4, "end_dim": 2}


def test_ideal_lattice_absolutely_simple():
    # End = GF2, so both lattices are {0, S}
    S1 = C.simples("GF2[S3]")[0]
    rep = SX.ideal_subobject_check(S1, inc("GF2", "GF4"))
    assert rep.passed and rep.dims["ideals"] == rep.dims["submodules"] == 2


def test_tensor_functor_and_permanence():
    i = inc("Q", "QW")
    assert SX.check_tensor_functoriality(C.regular("Q[C3]"), C.trivial("Q[C3]"), i).passed
    rep = SX.check_semisimplicity_permanence(C.regular("Q[S3]"), i)
    assert rep.passed and rep.dims["socle_tM"] == 6


def test_image_algebra_of_faithful_module():
    M = C.regular("Q[C3]")
    assert SX.image_algebra(M).dim == 3
    assert SX.image_algebra(MD.trivial_module(C.get_algebra("Q[C3]"))).dim == 1
