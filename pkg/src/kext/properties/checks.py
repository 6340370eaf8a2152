"""Named proposition checkers and the ``run_check`` driver."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field
from itertools import product

from .. import modules as MD
from .. import scalarext as SX
from ..errors import TooLarge, Undecidable, UnknownCheck, UnsupportedField
from ..exactnum.factor import is_separable_step
from ..exactnum.fields import FINITE_LIMIT, FiniteField, named_field
from ..exactnum import poly as P
from ..scalarext import CheckReport, TowerInclusion
from . import instances as C
from . import oracles as O
from .generators import random_module, rng_for

SUPPORTED = ("Q", "GF2", "GF3", "GF4")


@dataclass
class PropertyReport:
    check: str
    statement: str
    seed: int
    trials: int
    outcomes: list
    counterexample: dict | None
    wall_time: float = 0.0
    skipped: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None and bool(self.outcomes)

    def to_json(self, include_time: bool = True) -> dict:
        out = {"check": self.check, "statement": self.statement, "seed": self.seed,
               "trials": self.trials, "pass": self.passed, "instances": len(self.outcomes),
               "outcomes": self.outcomes, "counterexample": self.counterexample,
               "skipped": self.skipped}
        if include_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, include_time: bool = True) -> str:
        return json.dumps(self.to_json(include_time), sort_keys=True)


def _fname(K):
    return C.field_name(K)


def _ext_name(inc):
    return f"{_fname(inc.small)}->{_fname(inc.large)}"


def _relabel(rep: CheckReport, check, instance):
    rep.check = check
    rep.instance = instance
    return rep


# ---------------------------------------------------------------------------
# FF_T
# ---------------------------------------------------------------------------

FF_FIELDS = ("Q", "GF2", "GF3", "GF4", "QI", "QW", "GF2T")


def _ff_extensions(K):
    exts = C.extensions_from(K, include_trivial=False)
    return exts or C.extensions_from(K)


def check_ff_t(seed, trials):
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if _fname(E.field) not in FF_FIELDS:
            continue
        mods = [("reg", C.regular(name))]
        if E.group is not None:
            mods.append(("triv", C.trivial(name)))
        for inc in _ff_extensions(E.field):
            for (a, M), (b, N) in product(mods, repeat=2):
                rep = SX.check_relative_full_faithfulness(M, N, inc)
                yield _relabel(rep, "FF_T", f"{name} {a}->{b} over {_ext_name(inc)}")
    rng = rng_for(seed, "FF_T")
    pool = [n for n in C.algebra_names()
            if _fname(C.get_algebra(n).field) in FF_FIELDS and C.get_algebra(n).dim <= 6]
    for t in range(trials):
        name = rng.choice(pool)
        E = C.get_algebra(name)
        ka, M = random_module(name, rng, 8)
        kb, N = random_module(name, rng, 8)
        incs = _ff_extensions(E.field)
        inc = incs[rng.randrange(len(incs))]
        rep = SX.check_relative_full_faithfulness(M, N, inc)
        yield _relabel(rep, "FF_T", f"trial {t}: {name} {ka}->{kb} over {_ext_name(inc)}")


# ---------------------------------------------------------------------------
# semisimplicity permanence
# ---------------------------------------------------------------------------

def _semisimple_catalog_modules(max_dim=12):
    """(label, module) for semisimple modules of catalog algebras over supported fields."""
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if _fname(E.field) not in SUPPORTED or E.dim > max_dim:
            continue
        if E.is_semisimple():
            yield f"{name}/reg", C.regular(name)
        if E.dim <= 8:
            for i, S in enumerate(C.simples(name)):
                yield f"{name}:S{i}", S


def check_ss_separable(seed, trials):
    for label, M in _semisimple_catalog_modules():
        for inc in C.extensions_from(M.field, include_trivial=False):
            if not inc.separable:
                continue
            tM = SX.t_extend_module(M, inc)
            soc = MD.socle(tM)
            yield CheckReport("SS_SEPARABLE", f"{label} over {_ext_name(inc)}",
                              len(soc) == tM.dim, {"dim": tM.dim, "socle": len(soc)})
    rng = rng_for(seed, "SS_SEPARABLE")
    pool = [n for n in C.algebra_names() if _fname(C.get_algebra(n).field) in SUPPORTED
            and C.get_algebra(n).dim <= 8 and C.extensions_from(C.get_algebra(n).field, False)]
    for t in range(trials):
        name = rng.choice(pool)
        S = C.simples(name)
        a, b = S[rng.randrange(len(S))], S[rng.randrange(len(S))]
        M = MD.direct_sum(a, b, name=f"{name}:S+S")
        incs = C.extensions_from(M.field, include_trivial=False)
        inc = incs[rng.randrange(len(incs))]
        tM = SX.t_extend_module(M, inc)
        soc = MD.socle(tM)
        yield CheckReport("SS_SEPARABLE", f"trial {t}: {M.name} over {_ext_name(inc)}",
                          len(soc) == tM.dim, {"dim": tM.dim, "socle": len(soc)})


def check_ss_endosep(seed, trials):
    """Inseparable extension, but the simple constituents have separable
    endomorphism algebras: ``t(M)`` is certified semisimple through the
    separability of its image algebra."""
    inc = TowerInclusion(named_field("GF2T"), named_field("GF2TS"))
    names = [n for n in C.algebra_names() if _fname(C.get_algebra(n).field) == "GF2T"]
    for name in names:
        E = C.get_algebra(name)
        if not E.is_separable():
            continue
        rep = SX.check_semisimplicity_permanence(C.regular(name), inc, seed)
        yield _relabel(rep, "SS_ENDOSEP", f"{name}/reg over {_ext_name(inc)}")
    # over perfect fields every extension is separable; the hypothesis still applies
    for label, M in _semisimple_catalog_modules(max_dim=6):
        for inc2 in C.extensions_from(M.field, include_trivial=False):
            if not SX._simple_ends_separable(M, seed):
                continue
            tM = SX.t_extend_module(M, inc2)
            yield CheckReport("SS_ENDOSEP", f"{label} over {_ext_name(inc2)}",
                              MD.is_semisimple_module(tM), {"dim": tM.dim})
    rng = rng_for(seed, "SS_ENDOSEP")
    for t in range(trials):
        name = rng.choice([n for n in names if C.get_algebra(n).is_separable()])
        a = C.regular(name)
        M = MD.direct_sum(a, a, name=f"{name}/reg+reg") if rng.random() < 0.5 else a
        rep = SX.check_semisimplicity_permanence(M, inc, seed)
        yield _relabel(rep, "SS_ENDOSEP", f"trial {t}: {M.name or name} over {_ext_name(inc)}")


# ---------------------------------------------------------------------------
# the inseparable counterexample
# ---------------------------------------------------------------------------

def insep_instance():
    F, Fp = named_field("GF2T"), named_field("GF2TS")
    inc = TowerInclusion(F, Fp)
    S = C.regular("GF2TS/GF2T")
    return F, Fp, inc, S


def check_insep(seed, trials):
    F, Fp, inc, S = insep_instance()
    t = F.generator()
    f = [t, F.zero, F.one]  # x^2 - t = x^2 + t in characteristic 2
    step_sep = is_separable_step(f, F)
    rep = SX.check_semisimplicity_permanence(S, inc, seed)
    tS = SX.t_extend_module(S, inc)
    EndS, Ep, _ = SX.end_extension(S, inc)
    w = rep.witness
    ok = (rep.check == "INSEP_COUNTEREXAMPLE" and w is not None and not step_sep)
    if ok:
        z = Ep.parse_element(w["z"])
        ok = any(x != Fp.zero for x in z) and all(x == Fp.zero for x in Ep.mult(z, z))
        # z is central: it spans a nonzero nilpotent two-sided ideal
        ok = ok and all(Ep.mult(z, Ep.basis_vector(i)) == Ep.mult(Ep.basis_vector(i), z)
                        for i in range(Ep.dim))
    yield CheckReport("INSEP_COUNTEREXAMPLE", "S = F' over GF(2)(t), extended to F'", ok,
                      {"dim_tS": tS.dim, "end_dim": Ep.dim},
                      witness=w, details={"is_separable_step(x^2 - t)": step_sep,
                                          "tS_semisimple": False})


# ---------------------------------------------------------------------------
# Hom bound through semisimplification
# ---------------------------------------------------------------------------

HOM_POOL_FIELDS = ("Q", "GF2", "GF3")


def _hom_bound(X, Y, label):
    h = MD.hom_space(X, Y).dim
    hs = MD.hom_space(MD.semisimplify(X), MD.semisimplify(Y)).dim
    return CheckReport("HOM_SS_BOUND", label, h <= hs, {"hom": h, "hom_ss": hs})


def check_hom_ss_bound(seed, trials):
    R = C.regular("Q[x]/(x^2)")
    yield _hom_bound(R, R, "Q[x]/(x^2) reg->reg")
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if _fname(E.field) not in HOM_POOL_FIELDS or E.dim > 6:
            continue
        mods = C.basic_modules(name)
        if E.dim <= 4:
            mods = mods + [MD.submodule(mods[0], MD.socle(mods[0]), name=f"{name}:soc")]
        for X, Y in product(mods, repeat=2):
            yield _hom_bound(X, Y, f"{X.name or name} -> {Y.name or name}")
    rng = rng_for(seed, "HOM_SS_BOUND")
    pool = [n for n in C.algebra_names() if _fname(C.get_algebra(n).field) in HOM_POOL_FIELDS
            and C.get_algebra(n).dim <= 6]
    for t in range(trials):
        name = rng.choice(pool)
        ka, X = random_module(name, rng, 8)
        kb, Y = random_module(name, rng, 8)
        yield _hom_bound(X, Y, f"trial {t}: {name} {ka}->{kb}")


# ---------------------------------------------------------------------------
# Frobenius suite
# ---------------------------------------------------------------------------

def _soc_top(E):
    R = E.regular_module()
    soc = MD.submodule(R, MD.socle(R), name="soc")
    top = MD.quotient(R, E.radical, name="top").module
    if soc.dim != top.dim:
        return None
    return MD.find_isomorphism(soc, top)


def check_semisimple_frobenius(seed, trials):
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if E.radical_supported():
            if not E.is_semisimple():
                continue
        elif not E.is_separable():
            # without a radical algorithm, separability is the semisimplicity certificate
            continue
        ok, lam = E.is_frobenius(seed)
        yield CheckReport("SEMISIMPLE_IMPLIES_FROBENIUS", name, ok, {"dim": E.dim},
                          witness={"functional": E.format_element(lam)} if ok else None)


def check_frobenius_stable(seed, trials):
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if E.dim > 8:
            continue
        ok, _ = E.is_frobenius(seed)
        if not ok:
            continue
        for inc in C.extensions_from(E.field, include_trivial=False):
            Ep = SX.extend_algebra(E, inc)
            ok2, lam = Ep.is_frobenius(seed)
            yield CheckReport("FROBENIUS_STABLE", f"{name} over {_ext_name(inc)}", ok2,
                              {"dim": Ep.dim})


def check_frobenius_soc_top(seed, trials):
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if not E.radical_supported() or E.dim > 12:
            continue
        frob, _ = E.is_frobenius(seed)
        if not frob and not name.startswith(("T", "L")):
            continue
        iso = _soc_top(E)
        if frob:
            ok = iso is not None
        else:
            # triangular algebras: neither Frobenius nor soc = top
            ok = iso is None
        yield CheckReport("FROBENIUS_SOC_TOP", name, ok,
                          {"dim": E.dim, "socle": len(MD.socle(E.regular_module())),
                           "top": E.dim - len(E.radical)},
                          details={"frobenius": frob, "soc_iso_top": iso is not None})


# ---------------------------------------------------------------------------
# ideals of F' (x) End(S) versus submodules of t(S)
# ---------------------------------------------------------------------------

def _finite_simples():
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if not isinstance(E.field, FiniteField) or _fname(E.field) not in ("GF2", "GF3", "GF4"):
            continue
        for i, S in enumerate(C.simples(name)):
            yield f"{name}:S{i}", S


def check_ideal_lattice(seed, trials):
    for label, S in _finite_simples():
        for inc in C.extensions_from(S.field):
            EndS, _ = MD.endomorphism_algebra(S)
            if inc.large.q ** EndS.dim > FINITE_LIMIT or inc.large.q ** S.dim > FINITE_LIMIT:
                continue
            rep = SX.ideal_subobject_check(S, inc, seed)
            yield _relabel(rep, "IDEAL_LATTICE", f"{label} over {_ext_name(inc)}")


# ---------------------------------------------------------------------------
# tensor functor
# ---------------------------------------------------------------------------

def check_tensor_functor(seed, trials):
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if E.group is None:
            continue
        mods = [C.trivial(name), C.regular(name)]
        if E.radical_supported():
            mods += list(C.simples(name))
        for inc in C.extensions_from(E.field, include_trivial=False):
            for M, N in product(mods, repeat=2):
                if M.dim * N.dim > 48:
                    continue
                rep = SX.check_tensor_functoriality(M, N, inc)
                yield _relabel(rep, "TENSOR_FUNCTOR",
                               f"{M.name or name} (x) {N.name or name} over {_ext_name(inc)}")


# ---------------------------------------------------------------------------
# length and endomorphisms under extension
# ---------------------------------------------------------------------------

def check_length_end(seed, trials):
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if _fname(E.field) not in SUPPORTED:
            continue
        for i, S in enumerate(C.simples(name)):
            for inc in C.extensions_from(S.field, include_trivial=False):
                rep = SX.split_simple(S, inc, seed)
                e1, e2 = MD.end_dim(S), MD.end_dim(rep.extended)
                ok = rep.consistent and e1 == e2
                yield CheckReport("LENGTH_END", f"{name}:S{i} over {_ext_name(inc)}", ok,
                                  {"length_tS": rep.length_tS, "length_end": rep.length_end,
                                   "end_small": e1, "end_large": e2})
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if _fname(E.field) not in SUPPORTED:
            continue
        for M in C.basic_modules(name):
            for inc in C.extensions_from(E.field, include_trivial=False):
                e1, e2 = MD.end_dim(M), MD.end_dim(SX.t_extend_module(M, inc))
                yield CheckReport("LENGTH_END", f"{M.name or name} End over {_ext_name(inc)}",
                                  e1 == e2, {"end_small": e1, "end_large": e2})


# ---------------------------------------------------------------------------
# closed-form lattice data versus brute force
# ---------------------------------------------------------------------------

def oracle_modules():
    """GF(2)/GF(3) catalog modules of dimension at most 4."""
    for name in C.algebra_names():
        E = C.get_algebra(name)
        if _fname(E.field) not in ("GF2", "GF3"):
            continue
        cands = [("reg", C.regular(name))] if E.dim <= 4 else []
        if E.group is not None:
            cands.append(("triv", C.trivial(name)))
        if E.dim <= 12:
            cands += [(f"S{i}", S) for i, S in enumerate(C.simples(name)) if S.dim <= 4]
        if E.dim <= 4:
            R = C.regular(name)
            soc = MD.socle(R)
            if 0 < len(soc) < R.dim:
                cands.append(("soc", MD.submodule(R, soc)))
                cands.append(("reg/soc", MD.quotient(R, soc).module))
        for label, M in cands:
            if 0 < M.dim <= 4:
                yield f"{name}:{label}", M


def check_oracle_lattice(seed, trials):
    for label, M in oracle_modules():
        K = M.field
        brute = O.oracle_submodule_lattice(M)
        lat = MD.submodule_lattice(M)
        same_lattice = list(lat.elements) == brute
        soc_engine = tuple(tuple(r) for r in MD.socle(M))
        soc_oracle = O.oracle_socle(M, brute)
        length_engine = MD.composition_length(M)
        length_oracle = O.oracle_longest_chain(brute, K)
        ok = same_lattice and soc_engine == soc_oracle and length_engine == length_oracle
        yield CheckReport("ORACLE_LATTICE", label, ok,
                          {"lattice": len(lat), "oracle_lattice": len(brute),
                           "socle": len(soc_engine), "oracle_socle": len(soc_oracle),
                           "length": length_engine, "oracle_length": length_oracle})
    rng = rng_for(seed, "ORACLE_LATTICE")
    pool = [n for n in C.algebra_names() if _fname(C.get_algebra(n).field) in ("GF2", "GF3")
            and C.get_algebra(n).dim <= 4]
    for t in range(trials):
        name = rng.choice(pool)
        kind, M = random_module(name, rng, 4)
        if not 0 < M.dim <= 4:
            continue
        brute = O.oracle_submodule_lattice(M)
        lat = MD.submodule_lattice(M)
        ok = list(lat.elements) == brute and MD.composition_length(M) == \
            O.oracle_longest_chain(brute, M.field)
        yield CheckReport("ORACLE_LATTICE", f"trial {t}: {name} {kind}", ok,
                          {"lattice": len(lat), "oracle_lattice": len(brute)})


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

REGISTRY = {
    "FF_T": (check_ff_t,
             "reinterpretation of scalars is fully faithful relative to F'/F: "
             "F' (x) Hom(M, N) -> Hom(tM, tN) is an isomorphism"),
    "SS_SEPARABLE": (check_ss_separable,
                     "for a separable field extension, t sends semisimple modules to semisimple modules"),
    "SS_ENDOSEP": (check_ss_endosep,
                   "if every simple constituent of a semisimple M has separable endomorphism "
                   "algebra, t(M) is semisimple for any extension"),
    "INSEP_COUNTEREXAMPLE": (check_insep,
                             "F = GF(2)(t), F' = F(sqrt t): F' (x)_F F' has a nonzero square-zero "
                             "element, so t(F') is not semisimple"),
    "HOM_SS_BOUND": (check_hom_ss_bound,
                     "dim Hom(X, Y) <= dim Hom(X^ss, Y^ss)"),
    "FROBENIUS_SOC_TOP": (check_frobenius_soc_top,
                          "a Frobenius algebra has soc(E) isomorphic to E/rad(E) as right modules"),
    "FROBENIUS_STABLE": (check_frobenius_stable,
                         "F' (x)_F E is Frobenius whenever E is"),
    "SEMISIMPLE_IMPLIES_FROBENIUS": (check_semisimple_frobenius,
                                     "every semisimple algebra is Frobenius"),
    "IDEAL_LATTICE": (check_ideal_lattice,
                      "right ideals of F' (x) End(S) correspond to submodules of t(S) "
                      "by an inclusion preserving bijection"),
    "TENSOR_FUNCTOR": (check_tensor_functor,
                       "t(M (x) N) = t(M) (x) t(N) and t(M^dual) = t(M)^dual"),
    "LENGTH_END": (check_length_end,
                   "length of t(S) equals the length of F' (x) End(S) as a right module over "
                   "itself; dim End(tM) = dim End(M)"),
    "ORACLE_LATTICE": (check_oracle_lattice,
                       "closed-form socle, length and submodule lattice agree with brute force"),
}

CHECK_IDS = tuple(REGISTRY)


def run_check(check_id: str, seed: int = 0, trials: int = 0) -> PropertyReport:
    """Run one registered checker over the catalog plus ``trials`` seeded instances."""
    if check_id not in REGISTRY:
        raise UnknownCheck(check_id)
    fn, statement = REGISTRY[check_id]
    start = time.perf_counter()
    outcomes, skipped, counterexample = [], [], None
    gen = fn(seed, trials)
    while True:
        try:
            rep = next(gen)
        except StopIteration:
            break
        except (TooLarge, Undecidable, UnsupportedField) as exc:
            # a generator cannot resume after raising; record and stop
            skipped.append({"reason": type(exc).__name__, "message": str(exc)})
            break
        d = rep.to_json()
        outcomes.append(d)
        if not rep.passed and counterexample is None:
            counterexample = {"instance": rep.instance, "seed": seed, "report": d}
    return PropertyReport(check_id, statement, seed, trials, outcomes, counterexample,
                          time.perf_counter() - start, skipped)


def run_all(seed: int = 0, trials: int = 0, ids=None) -> list:
    return [run_check(i, seed, trials) for i in (ids or CHECK_IDS)]
