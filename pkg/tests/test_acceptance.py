"""Acceptance suite: ten exact criteria, each under a wall-clock budget.

Run alone with ``pytest tests/test_acceptance.py -v``; a one-line PASS/FAIL
summary per criterion is printed at the end of the session.
"""
import time

import pytest

from kext import scalarext as SX
from kext import serialize as S
from kext.exactnum import linalg as L
from kext.exactnum.fields import named_field
from kext.properties import instances as C
from kext.properties import run_check

SEED = 0
RESULTS = {}  # criterion label -> (passed, seconds, budget)


def _record(label, budget, fn):
    t0 = time.perf_counter()
    ok = False
    try:
        ok = bool(fn())
    finally:
        dt = time.perf_counter() - t0
        RESULTS[label] = (ok and dt < budget, dt, budget)
    assert ok, f"{label}: property failed"
    assert dt < budget, f"{label}: {dt:.1f} s exceeds the {budget} s budget"


def _passes(*reports):
    for r in reports:
        if not r.passed:
            raise AssertionError(f"{r.check} counterexample: {r.counterexample}")
    return True


def _find(report, instance):
    hits = [o for o in report.outcomes if o["instance"] == instance]
    assert hits, f"{instance} missing from {report.check}"
    return hits[0]


def test_01_ff_t():
    def body():
        r = run_check("FF_T", SEED, 50)
        fields = {o["instance"].rsplit(" over ", 1)[-1].split("->")[0] for o in r.outcomes}
        assert {"Q", "GF2", "GF3", "GF4", "QI", "QW", "GF2T"} <= fields
        assert len(r.outcomes) >= 100
        return _passes(r)
    _record("1 FF_T", 30, body)


def test_02_ss_separable():
    _record("2 SS_SEPARABLE", 30, lambda: _passes(run_check("SS_SEPARABLE", SEED, 50)))


def test_03_insep():
    def body():
        r = run_check("INSEP_COUNTEREXAMPLE", SEED, 0)
        o = r.outcomes[0]
        assert o["witness"]["power"] == 2
        assert o["details"]["is_separable_step(x^2 - t)"] is False
        return _passes(r)
    _record("3 INSEP_COUNTEREXAMPLE", 1, body)


def test_04_hom_ss_bound():
    def body():
        r = run_check("HOM_SS_BOUND", SEED, 200)
        assert len(r.outcomes) >= 200
        assert _find(r, "Q[x]/(x^2) reg->reg")["dims"] == {"hom": 2, "hom_ss": 4}
        return _passes(r)
    _record("4 HOM_SS_BOUND", 60, body)


def test_05_frobenius_suite():
    def body():
        a = run_check("SEMISIMPLE_IMPLIES_FROBENIUS", SEED, 20)
        b = run_check("FROBENIUS_STABLE", SEED, 20)
        c = run_check("FROBENIUS_SOC_TOP", SEED, 20)
        t2 = [o for o in c.outcomes if o["instance"].startswith("T2(Q)")]
        assert t2 and all(o["pass"] for o in t2)
        return _passes(a, b, c)
    _record("5 FROBENIUS", 30, body)


def test_06_ideal_lattice():
    def body():
        r = run_check("IDEAL_LATTICE", SEED, 0)
        o = _find(r, "GF4/GF2:S0 over GF2->GF4")
        assert o["dims"]["ideals"] == o["dims"]["submodules"] == 4
        return _passes(r)
    _record("6 IDEAL_LATTICE", 60, body)


def test_07_length_end():
    _record("7 LENGTH_END", 30, lambda: _passes(run_check("LENGTH_END", SEED, 20)))


def test_08_tensor_functor():
    _record("8 TENSOR_FUNCTOR", 30, lambda: _passes(run_check("TENSOR_FUNCTOR", SEED, 20)))


def test_09_oracle_lattice():
    _record("9 ORACLE_LATTICE", 60, lambda: _passes(run_check("ORACLE_LATTICE", SEED, 20)))


def _splitting_examples():
    inc = lambda a, b: SX.inclusion(named_field(a), named_field(b))  # noqa: E731
    # GF(2)[C3], 2-dim simple over GF(4): two 1-dim simples
    r = SX.split_simple(S.load_module("catalog:gf2c3_simple2"), inc("GF2", "GF4"))
    assert r.semisimple and [s.module.dim for s in r.decomposition.summands] == [1, 1]
    # Q[C3], 2-dim simple over Q(w): length 2, cut out by character idempotents
    QW = named_field("QW")
    r = SX.split_simple(C.simples("Q[C3]")[1], inc("Q", "QW"))
    assert r.length_tS == r.length_end == 2
    w, third = QW.generator(), QW.inv(QW.from_int(3))
    idem = [[QW.mul(third, QW.pow(w, (-j * k) % 3)) for j in range(3)] for k in range(3)]
    Ep = r.extended.alg
    assert all(Ep.mult(e, e) == e for e in idem)
    assert [L.rank(r.extended.act(e)) for e in idem] == [0, 1, 1]
    # Q-quaternions over Q(i): dim 4, End dim 4, semisimple
    r = SX.split_simple(C.regular("H(-1,-1)/Q"), inc("Q", "QI"))
    assert r.extended.dim == 4 and r.end_dim_large == 4 and r.semisimple
    return True


def test_10_splitting_examples():
    _record("10 splitting examples", 10, _splitting_examples)


@pytest.fixture(scope="module", autouse=True)
def _summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    lines = [f"{label:<26} {'PASS' if ok else 'FAIL'}  {dt:6.2f} s (< {budget} s)"
             for label, (ok, dt, budget) in RESULTS.items()]
    if reporter is not None:
        reporter.write_line("")
        reporter.write_line("acceptance criteria:")
        for line in lines:
            reporter.write_line(line)
    else:
        print("\n".join(lines))
