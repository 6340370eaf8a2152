import random

import pytest
from hypothesis import given, settings, strategies as st

from kext import modules as MD
from kext.errors import TooLarge
from kext.exactnum import linalg as L
from kext.properties import instances as C
from kext.properties.generators import random_module, rng_for
from kext.properties.oracles import (oracle_hom_dim, oracle_longest_chain, oracle_socle,
                                     oracle_submodule_lattice)


@pytest.mark.parametrize("name,dims,endo,mult", [
    ("Q[C3]", [1, 2], [1, 2], [1, 1]),
    ("H(-1,-1)/Q", [4], [4], [1]),
    ("Q[Q8]", [1, 1, 1, 1, 4], [1, 1, 1, 1, 4], [1, 1, 1, 1, 1]),
    ("Q[S3]", [1, 1, 2], [1, 1, 1], [1, 1, 2]),
    ("GF3[S3]", [1, 1], [1, 1], [3, 3]),
])
def test_decompose_regular(name, dims, endo, mult):
    dec = MD.decompose(C.regular(name))
    assert dec.dims == dims and dec.endo_dims == endo and dec.multiplicities == mult
    assert sum(d * m for d, m in zip(dims, mult)) == C.get_algebra(name).dim


def test_modular_composition_lengths():
    # GF2[S3]: trivial and the 2-dim simple, each twice
    assert MD.composition_length(C.regular("GF2[S3]")) == 4
    # GF2[A4]: projective covers of dim 4 and 8
    assert MD.composition_length(C.regular("GF2[A4]")) == 8


def test_upper_triangular_socle():
    T = C.regular("T2(Q)")
    assert len(MD.socle(T)) == 2
    assert MD.socle_filtration(T).dims == [0, 2, 3]
    assert not MD.is_semisimple_module(T)


def test_truncated_polynomial_is_uniserial():
    filt = MD.socle_filtration(C.regular("Q[x]/(x^3)"))
    assert filt.dims == [0, 1, 2, 3] and filt.slg == 3
    assert [X.dim for X in filt.layers] == [1, 1, 1]


def test_gf2_c2_lattice():
    R = C.regular("GF2[C2]")
    lat = MD.submodule_lattice(R)
    assert len(lat) == 3 and lat.longest_chain() == 2
    assert lat.elements == oracle_submodule_lattice(R)


@pytest.mark.parametrize("name", ["GF2[C2]", "GF2[S3]", "GF3[C3]", "T2(GF2)", "GF2[C2xC2]",
                                  "GF2[x]/(x^3)", "L2(GF3)"])
def test_socle_and_chain_against_oracle(name):
    M = C.regular(name)
    if M.dim > 6:
        pytest.skip("oracle bound")
    lat = oracle_submodule_lattice(M)
    assert MD._key(MD.socle(M)) == oracle_socle(M, lat)
    assert MD.composition_length(M) == oracle_longest_chain(lat, M.field)


@pytest.mark.parametrize("name", ["GF2[C2]", "GF2[C3]", "T2(GF2)", "GF3[C2]"])
def test_end_dim_against_oracle(name):
    M = C.regular(name)
    assert MD.end_dim(M) == oracle_hom_dim(M, M) == M.dim


def test_oracle_bound():
    with pytest.raises(TooLarge):
        oracle_hom_dim(C.regular("GF2[S3]"), C.regular("GF2[S3]"))


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10 ** 6),
       name=st.sampled_from(["GF2[C2]", "GF2[S3]", "GF3[C3]", "T2(GF2)", "GF2[C3]"]))
def test_random_hom_dims_match_oracle(seed, name):
    rng = random.Random(seed)
    _, M = random_module(name, rng, 3)
    _, N = random_module(name, rng, 3)
    if M.field.q ** (M.dim * N.dim) > 2 ** 16:
        return
    H = MD.hom_space(M, N)
    assert H.dim == oracle_hom_dim(M, N)
    for Phi in H.basis:
        assert MD.is_intertwiner(Phi, M, N)


def test_permutation_module_of_s3():
    E = C.get_algebra("Q[S3]")
    P = MD.permutation_module(E, ["(0 1 2)", "(0 1)"], 3)
    # trivial plus the standard representation; End dim = number of orbits on pairs
    assert P.dim == 3 and MD.end_dim(P) == 2
    assert MD.decompose(P).dims == [1, 2]


def test_tensor_and_dual():
    S = C.simples("Q[S3]")
    V = S[2]
    T = MD.tensor_module(V, V)
    dec = MD.decompose(T)
    assert T.dim == 4 and dec.dims == [1, 1, 2]
    assert MD.find_isomorphism(MD.dual_module(V), V) is not None


def test_isomorphism_search():
    S = C.simples("Q[S3]")
    assert MD.find_isomorphism(S[0], S[1]) is None
    Phi = MD.find_isomorphism(S[2], S[2])
    assert Phi is not None and L.is_invertible(Phi) and MD.is_intertwiner(Phi, S[2], S[2])


def test_simplicity():
    S = C.simples("Q[S3]")
    assert MD.is_simple(S[2]) == (True, True)
    assert MD.is_simple(C.regular("Q[C3]"))[0] is False
    # the quaternion algebra is a division algebra: its regular module is simple
    assert MD.is_simple(C.regular("H(-1,-1)/Q"))[0] is True


def test_quotient_and_submodule():
    M = C.regular("Q[x]/(x^3)")
    soc = MD.socle(M)
    Qt = MD.quotient(M, soc)
    assert Qt.module.dim == 2
    assert MD.submodule(M, soc).dim == 1
    assert MD.direct_sum(M, Qt.module).dim == 5


def test_generators_are_deterministic():
    a = random_module("GF2[S3]", rng_for(3, "x"), 4)
    b = random_module("GF2[S3]", rng_for(3, "x"), 4)
    assert a[0] == b[0] and a[1].same_as(b[1])
