import json

import pytest

from kext.errors import TooLarge, UnknownCheck
from kext.exactnum.fields import named_field
from kext.properties import CATALOG_VERSION, CHECK_IDS, REGISTRY, catalog, lookup, run_check
from kext.properties import instances as C
from kext.properties.oracles import all_subspaces, gaussian_binomial, oracle_submodule_lattice
from kext.scalarext import inclusion, t_extend_module


def test_registry_is_complete():
    assert len(CHECK_IDS) == 12 and set(CHECK_IDS) == set(REGISTRY)
    for cid in CHECK_IDS:
        fn, statement = REGISTRY[cid]
        assert callable(fn) and statement


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_check("NO_SUCH_CHECK", 0, 1)


def test_hom_ss_bound_contains_dual_numbers():
    r = run_check("HOM_SS_BOUND", 1, 50)
    assert r.passed
    first = r.outcomes[0]
    # Hom(A, A) = A has dim 2, the semisimplification gives 2 copies of the 1-dim simple
    assert first["instance"] == "Q[x]/(x^2) reg->reg"
    assert first["dims"] == {"hom": 2, "hom_ss": 4}


def test_ff_t_with_trials():
    r = run_check("FF_T", 7, 100)
    assert r.passed and not r.counterexample
    assert len(r.outcomes) > 100


def test_insep_report():
    r = run_check("INSEP_COUNTEREXAMPLE", 0, 0)
    assert r.passed and len(r.outcomes) == 1
    assert r.outcomes[0]["witness"]["z"] == ["s", "1"]


@pytest.mark.parametrize("cid", ["INSEP_COUNTEREXAMPLE", "FROBENIUS_STABLE", "ORACLE_LATTICE"])
def test_reports_are_deterministic(cid):
    a = run_check(cid, 5, 10).dumps(include_time=False)
    b = run_check(cid, 5, 10).dumps(include_time=False)
    assert a == b
    obj = json.loads(a)
    assert obj["check"] == cid and "wall_time" not in obj


def test_catalog_contents():
    assert CATALOG_VERSION == "1"
    names = {e.name for e in catalog()}
    assert "(Q[C3], Q->QW)" in names
    assert {"Q[C3]", "GF2[S3]", "H(-1,-1)/Q", "GF2TS/GF2T"} <= names
    assert any(e.kind == "pair" for e in catalog())


def test_lookup():
    assert lookup("Q[C3]/reg").dim == 3
    assert lookup("Q[S3]/triv").dim == 1
    assert lookup("GF4") is named_field("GF4")
    assert lookup("catalog:Q[S3]:S2").dim == 2


def test_gaussian_binomial_counts_subspaces():
    K = named_field("GF3")
    for k in range(4):
        assert sum(1 for W in all_subspaces(K, 3) if len(W) == k) == gaussian_binomial(3, k, 3)
    assert gaussian_binomial(4, 2, 2) == 35


def test_oracle_lattice_examples():
    assert len(oracle_submodule_lattice(C.regular("GF2[C2]"))) == 3
    assert len(oracle_submodule_lattice(C.trivial("GF2[C2]"))) == 2
    # GF4/GF2 is a field, so its regular module is simple; over GF4 it splits as 1 + 1
    R = C.regular("GF4/GF2")
    assert len(oracle_submodule_lattice(R)) == 2
    tR = t_extend_module(R, inclusion(named_field("GF2"), named_field("GF4")))
    assert len(oracle_submodule_lattice(tR)) == 4


def test_oracle_refuses_large_spaces():
    # 16^12 vectors is far beyond enumeration
    M = t_extend_module(C.regular("GF2[A4]"), inclusion(named_field("GF2"), named_field("GF16")))
    with pytest.raises(TooLarge):
        oracle_submodule_lattice(M)
