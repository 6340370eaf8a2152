"""Scalar extension along a tower inclusion ``F -> F'``.

Because ``F'`` literally extends the step list of ``F``, the algebra
``F' (x)_F E`` has the same structure constants as ``E`` read over ``F'``, and
the functor ``t`` keeps every action matrix and only reinterprets its entries.
All checks below compare computations done independently on both sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from . import modules as MD
from .algebra import Algebra
from .errors import FieldMismatch, NotSimple, TooLarge, Undecidable, UnsupportedField
from .exactnum import linalg as L
from .exactnum.factor import is_separable_step
from .exactnum.fields import FINITE_LIMIT, Field, FiniteField, RationalFunctionField


class TowerInclusion:
    def __init__(self, small: Field, large: Field):
        if small not in large.levels:
            raise FieldMismatch(f"{large} does not extend {small}")
        self.small = small
        self.large = large

    def __repr__(self):
        return f"{self.small} -> {self.large}"

    @property
    def steps(self) -> list:
        lv = self.large.levels
        return list(lv[lv.index(self.small) + 1:])

    @property
    def is_trivial(self) -> bool:
        return self.small is self.large

    @property
    def separable(self) -> bool:
        for f in self.steps:
            if isinstance(f, RationalFunctionField):
                continue
            if not is_separable_step(list(f.minpoly), f.base):
                return False
        return True

    @property
    def degree(self):
        """``[F':F]`` or ``None`` when a transcendental step is involved."""
        d = 1
        for f in self.steps:
            if isinstance(f, RationalFunctionField):
                return None
            d *= f.d
        return d

    def embed(self, x):
        return self.large.embed(x, self.small)

    def embed_matrix(self, A: L.Mat) -> L.Mat:
        return L.map_matrix(A, self.embed, self.large)


def inclusion(small, large) -> TowerInclusion:
    return TowerInclusion(small, large)


# ---------------------------------------------------------------------------
# the functor t
# ---------------------------------------------------------------------------

def extend_algebra(E: Algebra, inc: TowerInclusion) -> Algebra:
    """``F' (x)_F E``: the same structure constants read over ``F'``."""
    if E.field is not inc.small:
        raise FieldMismatch(f"algebra over {E.field}, inclusion starts at {inc.small}")
    if inc.is_trivial:
        return E
    # memoised on E so that every extended module shares one algebra object
    cache = E.__dict__.setdefault("_extensions", {})
    if inc.large.key in cache:
        return cache[inc.large.key]
    f = inc.embed
    sc = [[[f(c) for c in cell] for cell in row] for row in E.sc]
    E2 = Algebra(inc.large, sc, [f(c) for c in E.unit], name=f"{E.name}@{inc.large}",
                 group=E.group, check=False, generators=E.generators)
    cache[inc.large.key] = E2
    return E2


def t_extend_module(M: MD.Module, inc: TowerInclusion) -> MD.Module:
    if M.field is not inc.small:
        raise FieldMismatch(f"module over {M.field}, inclusion starts at {inc.small}")
    E2 = extend_algebra(M.alg, inc)
    if E2 is M.alg:
        return M
    action = [inc.embed_matrix(A) for A in M.action]
    return MD.Module(E2, action, check=False, name=f"t({M.name})", dim=M.dim)


def t_extend_map(Phi: L.Mat, inc: TowerInclusion) -> L.Mat:
    return inc.embed_matrix(Phi)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    check: str
    instance: str
    passed: bool
    dims: dict
    witness: object = None
    details: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"check": self.check, "instance": self.instance, "pass": self.passed,
               "dims": self.dims}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


def _name(*objs):
    return " | ".join(str(getattr(o, "name", None) or o) for o in objs)


def check_relative_full_faithfulness(M, N, inc: TowerInclusion) -> CheckReport:
    """``dim_F Hom(M, N) = dim_F' Hom(tM, tN)`` and the reinterpreted basis
    is an ``F'``-basis of ``Hom(tM, tN)``."""
    H = MD.hom_space(M, N)
    tM, tN = t_extend_module(M, inc), t_extend_module(N, inc)
    H2 = MD.hom_space(tM, tN)
    images = [t_extend_map(Phi, inc) for Phi in H.basis]
    K2 = inc.large
    rank = L.rank(L.Mat(K2, [X.flat() for X in images], M.dim * N.dim)) if images else 0
    inside = all(MD.is_intertwiner(X, tM, tN) for X in images)
    ok = H.dim == H2.dim and rank == H.dim and inside
    return CheckReport("FF_T", _name(M, N, inc), ok,
                       {"small": H.dim, "large": H2.dim, "rank_of_image": rank})


def check_exactness(Phi: L.Mat, inc: TowerInclusion) -> bool:
    """Rank (hence kernel and image dimension) is unchanged by reinterpretation."""
    return L.rank(Phi) == L.rank(t_extend_map(Phi, inc))


@dataclass
class SplitReport:
    source: MD.Module
    extended: MD.Module
    decomposition: MD.DecompositionReport | None
    filtration: MD.FiltrationReport | None
    end_dim_small: int
    end_dim_large: int
    length_tS: int | None
    length_end: int | None
    semisimple: bool | None
    witness: object = None

    @property
    def consistent(self) -> bool:
        if self.length_tS is None or self.length_end is None:
            return self.witness is not None
        return self.length_tS == self.length_end

    def to_json(self) -> dict:
        out = {
            "source_dim": self.source.dim,
            "extended_dim": self.extended.dim,
            "end_dim_small": self.end_dim_small,
            "end_dim_large": self.end_dim_large,
            "length_tS": self.length_tS,
            "length_end": self.length_end,
            "semisimple": self.semisimple,
            "consistent": self.consistent,
        }
        if self.decomposition is not None:
            d = self.decomposition
            out["summands"] = [{"dim": s.module.dim, "multiplicity": s.multiplicity,
                                "endo_dim": s.endo_dim} for s in d.summands]
        if self.filtration is not None:
            out["socle_dims"] = self.filtration.dims
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _require_simple(S, seed=0):
    simple, certified = MD.is_simple(S, seed)
    if not simple:
        raise NotSimple(f"{S.name} is not simple")
    return certified


def end_extension(S: MD.Module, inc: TowerInclusion):
    """``(End(S), F' (x) End(S), basis of End(S))``."""
    EndS, basis = MD.endomorphism_algebra(S)
    return EndS, extend_algebra(EndS, inc), basis


def split_simple(S: MD.Module, inc: TowerInclusion, seed: int = 0) -> SplitReport:
    _require_simple(S, seed)
    tS = t_extend_module(S, inc)
    EndS, Ep, _ = end_extension(S, inc)
    if tS.alg.radical_supported():
        filt = MD.socle_filtration(tS)
        ss = filt.slg <= 1
        if ss:
            dec = MD.decompose(tS, seed)
            length = dec.length
        else:
            dec = None
            length = sum(MD.composition_length(layer, seed) for layer in filt.layers)
        length_end = MD.composition_length(Ep.regular_module(), seed)
        return SplitReport(S, tS, dec, filt if not ss else None, EndS.dim, Ep.dim,
                           length, length_end, ss)
    w = nilpotent_central_witness(Ep)
    if w is not None:
        return SplitReport(S, tS, None, None, EndS.dim, Ep.dim, None, None, False,
                           witness=w)
    raise UnsupportedField(f"cannot analyse t(S) over {inc.large}")


# ---------------------------------------------------------------------------
# nilpotent witnesses (inseparable regime)
# ---------------------------------------------------------------------------

def nilpotent_central_witness(A: Algebra):
    """Search ``z = b - c 1`` (``b`` a basis element, ``c`` a power of a tower
    generator) that is nonzero, central and satisfies ``z^p = 0``.

    A nonzero central nilpotent shows ``A`` is not semisimple.
    """
    K = A.field
    p = K.characteristic
    if p == 0:
        return None
    consts = [K.zero, K.one]
    for f in K.levels[1:]:
        g = K.embed(f.generator(), f)
        x = K.one
        for _ in range(p):
            x = K.mul(x, g)
            consts.append(x)
    center = A.center
    cpiv = L.pivots_of(center, K) if center else []
    for i, c in product(range(A.dim), consts):
        z = list(A.basis_vector(i))
        z = [K.sub(zi, K.mul(c, ui)) for zi, ui in zip(z, A.unit)]
        if all(x == K.zero for x in z):
            continue
        if not L.contains(center, cpiv, z, K):
            continue
        if all(x == K.zero for x in A.power(z, p)):
            return {"z": A.format_element(z), "power": p, "basis_index": i,
                    "scalar": K.format(c)}
    return None


# ---------------------------------------------------------------------------
# ideals of F' (x) End(S)  <->  submodules of t(S)
# ---------------------------------------------------------------------------

def ideal_subobject_check(S: MD.Module, inc: TowerInclusion, seed: int = 0) -> CheckReport:
    K2 = inc.large
    if not isinstance(K2, FiniteField):
        raise UnsupportedField("lattice enumeration needs a finite extension field")
    _require_simple(S, seed)
    tS = t_extend_module(S, inc)
    EndS, Ep, basis = end_extension(S, inc)
    if K2.q ** Ep.dim > FINITE_LIMIT:
        raise TooLarge(f"|E'| = {K2.q}^{Ep.dim} exceeds the enumeration bound")
    tbasis = [t_extend_map(B, inc) for B in basis]
    ideals = MD.submodule_lattice(Ep.regular_module())
    subs = MD.submodule_lattice(tS)

    def image(I):
        rows = []
        for x in I:
            Phi = Ep.combine(list(x), tbasis)
            rows.extend(Phi.rows)
        return MD._key(L.span(rows, tS.dim, K2)) if rows else ()
    images = [image(I) for I in ideals.elements]
    bijective = len(set(images)) == len(images) and set(images) == set(subs.elements)
    order_ok = True
    if bijective:
        for i, j in product(range(len(ideals)), repeat=2):
            a, b = subs.index[images[i]], subs.index[images[j]]
            if ideals.order[i][j] != subs.order[a][b]:
                order_ok = False
                break
    return CheckReport("IDEAL_LATTICE", _name(S, inc), bijective and order_ok,
                       {"ideals": len(ideals), "submodules": len(subs),
                        "end_dim": EndS.dim})


# ---------------------------------------------------------------------------
# tensor structure
# ---------------------------------------------------------------------------

def check_tensor_functoriality(M, N, inc: TowerInclusion) -> CheckReport:
    lhs = t_extend_module(MD.tensor_module(M, N), inc)
    rhs = MD.tensor_module(t_extend_module(M, inc), t_extend_module(N, inc))
    dl = t_extend_module(MD.dual_module(M), inc)
    dr = MD.dual_module(t_extend_module(M, inc))
    ok_t = lhs.alg is rhs.alg and lhs.action == rhs.action
    ok_d = dl.alg is dr.alg and dl.action == dr.action
    return CheckReport("TENSOR_FUNCTOR", _name(M, N, inc), ok_t and ok_d,
                       {"tensor": lhs.dim, "dual": dl.dim},
                       details={"tensor_equal": ok_t, "dual_equal": ok_d})


# ---------------------------------------------------------------------------
# semisimplicity permanence
# ---------------------------------------------------------------------------

def image_algebra(M: MD.Module) -> Algebra:
    """The subalgebra of ``End_F(M)`` spanned by the action matrices."""
    K = M.field
    m = M.dim
    flat = L.span([A.flat() for A in M.action], m * m, K)
    piv = L.pivots_of(flat, K)
    mats = [L.Mat(K, [v[i * m:(i + 1) * m] for i in range(m)], m) for v in flat]

    def coords(X):
        v = X.flat()
        return [v[p] for p in piv]
    sc = [[coords(X @ Y) for Y in mats] for X in mats]
    unit = coords(L.identity(K, m))
    return Algebra(K, sc, unit, name=f"im({M.name})", check=False)


def check_semisimplicity_permanence(M: MD.Module, inc: TowerInclusion, seed: int = 0) -> CheckReport:
    """Certify ``t(M)`` semisimple, or exhibit why it is not."""
    tM = t_extend_module(M, inc)
    inst = _name(M, inc)
    small_ok = M.alg.radical_supported()
    large_ok = tM.alg.radical_supported()
    if small_ok and large_ok:
        ss_small = MD.is_semisimple_module(M)
        ss_large = MD.is_semisimple_module(tM)
        if not ss_small:
            return CheckReport("SS_SEPARABLE", inst, True, {"dim": M.dim},
                               details={"regime": "not applicable: M not semisimple"})
        if inc.separable:
            return CheckReport("SS_SEPARABLE", inst, ss_large,
                               {"dim": M.dim, "socle_tM": len(MD.socle(tM))},
                               details={"regime": "separable extension"})
        endsep = _simple_ends_separable(M, seed)
        if endsep:
            return CheckReport("SS_ENDOSEP", inst, ss_large,
                               {"dim": M.dim, "socle_tM": len(MD.socle(tM))},
                               details={"regime": "separable endomorphism algebras"})
        return CheckReport("SS_SEPARABLE", inst, True, {"dim": M.dim},
                           details={"regime": "no hypothesis applies",
                                    "tM_semisimple": ss_large})
    # positive characteristic function fields: certificates only
    imgA = image_algebra(tM)
    if imgA.is_separable():
        return CheckReport("SS_ENDOSEP", inst, True, {"dim": M.dim, "image_dim": imgA.dim},
                           details={"regime": "separable image algebra",
                                    "tM_semisimple": True})
    EndM, _ = MD.endomorphism_algebra(M)
    Ep = extend_algebra(EndM, inc)
    w = nilpotent_central_witness(Ep)
    if w is not None:
        return CheckReport("INSEP_COUNTEREXAMPLE", inst, True, {"dim": M.dim, "end_dim": Ep.dim},
                           witness=w, details={"regime": "central nilpotent in F'(x)End(M)",
                                               "tM_semisimple": False})
    raise Undecidable(f"no certificate regime applies to {inst}")


def _simple_ends_separable(M: MD.Module, seed=0) -> bool:
    dec = MD.decompose(M, seed)
    for s in dec.summands:
        EndS, _ = MD.endomorphism_algebra(s.module)
        if not EndS.is_separable():
            return False
    return True
