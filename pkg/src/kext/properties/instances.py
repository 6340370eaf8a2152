"""The curated instance catalog.

Names are stable identifiers (``"Q[C3]"``, ``"GF2[S3]"``, ``"T2(Q)"``,
``"GF4/GF2"``...).  Builders are memoised so that every lookup of a name returns
the same algebra object, which keeps extended algebras shared as well.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .. import algebra as A
from .. import modules as MD
from ..exactnum.fields import named_field
from ..groups import group_names
from ..scalarext import TowerInclusion

CATALOG_VERSION = "1"

FIELDS = ["Q", "GF2", "GF3", "GF4", "GF9", "GF16", "QI", "QW", "GF2T", "GF2TS"]

# (small, large) tower inclusions; the trivial inclusion is added per field
EXTENSIONS = [
    ("Q", "QI"), ("Q", "QW"),
    ("GF2", "GF4"), ("GF4", "GF16"), ("GF2", "GF16"),
    ("GF3", "GF9"),
    ("GF2T", "GF2TS"),
]

POLYQUOTIENTS = {
    "Q": [[0, 0, 1], [0, 0, 0, 1], [1, 0, 1], [-1, 0, 1], [-1, 0, 0, 1], [1, 0, 0, 0, 1],
          [-2, 0, 1], [0, 1, 0, 1]],
    "GF2": [[0, 0, 1], [1, 1, 1], [0, 0, 0, 1], [1, 1, 0, 1], [1, 1, 0, 0, 1], [1, 0, 0, 0, 1]],
    "GF3": [[0, 0, 1], [1, 0, 1], [2, 0, 0, 1], [1, 1, 0, 0, 1]],
    "GF4": [[0, 0, 1], ["w", 1, 1]],
    "GF2T": [["t", 0, 1], [1, 1, 1]],
}

FIELD_EXTENSION_ALGEBRAS = {
    # an algebraic step viewed as an algebra over the level below
    "GF4/GF2": "GF4", "GF16/GF4": "GF16", "GF9/GF3": "GF9", "QI/Q": "QI", "QW/Q": "QW",
    "GF2TS/GF2T": "GF2TS",
}

EXTRA_GROUP_ALGEBRAS = ["GF4[C2]", "GF4[C3]", "GF4[S3]", "QI[C4]", "QI[C2]", "QW[C3]",
                        "GF2T[C2]", "GF2T[C3]", "GF2T[S3]"]


def _poly_name(field, coeffs):
    from ..exactnum import poly as P
    K = named_field(field)
    f = P.trim([K.coerce(c) for c in coeffs], K)
    return f"{field}[x]/({P.to_str(f, K)})"


@lru_cache(maxsize=None)
def algebra_names() -> tuple:
    names = []
    for g in group_names():
        for F in ("Q", "GF2", "GF3"):
            names.append(f"{F}[{g}]")
    names += EXTRA_GROUP_ALGEBRAS
    for F, polys in POLYQUOTIENTS.items():
        names += [_poly_name(F, f) for f in polys]
    names += list(FIELD_EXTENSION_ALGEBRAS)
    for F in ("Q", "GF2", "GF3"):
        names += [f"T2({F})", f"L2({F})", f"T3({F})", f"M2({F})"]
    names += ["T1(Q)", "L3(Q)"]
    names += ["H(-1,-1)/Q", "H(1,1)/Q", "H(-1,-1)/GF3", "H(-1,-1)/QI"]
    names += ["Q[C2]xT2(Q)", "GF2[C2]xGF4/GF2", "Q[x]/(x^3)/(x^2)", "T3(Q)/rad^2"]
    return tuple(names)


def _split_group_name(name):
    F, rest = name.split("[", 1)
    return F, rest[:-1]


@lru_cache(maxsize=None)
def get_algebra(name: str) -> A.Algebra:
    if name not in algebra_names():
        from ..errors import BadParameters
        raise BadParameters(f"unknown catalog algebra {name!r}")
    if name in FIELD_EXTENSION_ALGEBRAS:
        return A.field_algebra(named_field(FIELD_EXTENSION_ALGEBRAS[name]), name=name)
    if name.startswith("H("):
        params, F = name[2:].split(")/")
        a, b = params.split(",")
        return A.quaternion_algebra(int(a), int(b), named_field(F), name=name)
    for kind in ("T", "L", "M"):
        if name.startswith(kind) and name[1].isdigit() and "(" in name and "/" not in name:
            n = int(name[1])
            F = named_field(name[3:-1])
            if kind == "M":
                return A.matrix_algebra(n, F, name=name)
            return A.triangular_algebra(n, F, lower=(kind == "L"), name=name)
    if name == "Q[C2]xT2(Q)":
        return A.product_algebra(get_algebra("Q[C2]"), get_algebra("T2(Q)"), name=name)
    if name == "GF2[C2]xGF4/GF2":
        return A.product_algebra(get_algebra("GF2[C2]"), get_algebra("GF4/GF2"), name=name)
    if name == "Q[x]/(x^3)/(x^2)":
        E = get_algebra("Q[x]/(x^3)")
        return A.quotient_algebra(E, [E.basis_vector(2)], name=name)
    if name == "T3(Q)/rad^2":
        E = get_algebra("T3(Q)")
        rad = E.radical
        return A.quotient_algebra(E, E.ideal_product(rad, rad), name=name)
    if "[x]/(" in name:
        F = name.split("[", 1)[0]
        for coeffs in POLYQUOTIENTS[F]:
            if _poly_name(F, coeffs) == name:
                return A.polyquotient(coeffs, named_field(F), name=name)
    F, g = _split_group_name(name)
    return A.group_algebra(g, named_field(F), name=name)


def algebras(fields=None, max_dim=None) -> list:
    out = []
    for n in algebra_names():
        E = get_algebra(n)
        if fields is not None and field_name(E.field) not in fields:
            continue
        if max_dim is not None and E.dim > max_dim:
            continue
        out.append(E)
    return out


def field_name(K) -> str:
    for n in FIELDS:
        if named_field(n) is K:
            return n
    return str(K)


def extensions_from(K, include_trivial=True) -> list:
    name = field_name(K)
    out = [TowerInclusion(K, K)] if include_trivial else []
    for s, l in EXTENSIONS:
        if s == name:
            out.append(TowerInclusion(named_field(s), named_field(l)))
    return out


def all_extensions() -> list:
    return [TowerInclusion(named_field(s), named_field(l)) for s, l in EXTENSIONS]


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def regular(name: str) -> MD.Module:
    return get_algebra(name).regular_module()


@lru_cache(maxsize=None)
def trivial(name: str) -> MD.Module:
    return MD.trivial_module(get_algebra(name))


@lru_cache(maxsize=None)
def simples(name: str) -> tuple:
    """Simple modules of a catalog algebra, one per isomorphism class."""
    dec = MD.decompose(regular(name))
    out = []
    for i, s in enumerate(dec.summands):
        s.module.name = f"{name}:S{i}"
        out.append(s.module)
    return tuple(out)


def basic_modules(name: str) -> list:
    E = get_algebra(name)
    mods = [regular(name)]
    if E.group is not None:
        mods.append(trivial(name))
    return mods


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str
    description: str


def catalog() -> list:
    """Deterministic list of named instances (algebras, extensions, pairs)."""
    entries = [Entry(n, "algebra", f"dim {get_algebra(n).dim} over {field_name(get_algebra(n).field)}")
               for n in algebra_names()]
    for s, l in EXTENSIONS:
        entries.append(Entry(f"{s}->{l}", "extension", "separable" if TowerInclusion(
            named_field(s), named_field(l)).separable else "inseparable"))
    for n in algebra_names():
        E = get_algebra(n)
        for inc in extensions_from(E.field, include_trivial=False):
            entries.append(Entry(f"({n}, {field_name(inc.small)}->{field_name(inc.large)})", "pair",
                                 "algebra with extension"))
    entries.append(Entry("INSEP", "witness",
                         "F = GF(2)(t), F' = F(s) with s^2 = t; S = F' as a module over itself"))
    return entries


def lookup(ref: str):
    """Resolve ``catalog:NAME`` (or a bare name) to an algebra, module or field."""
    name = ref[len("catalog:"):] if ref.startswith("catalog:") else ref
    if name in FIELDS:
        return named_field(name)
    if name in algebra_names():
        return get_algebra(name)
    for suffix, fn in (("/reg", regular), ("/triv", trivial)):
        if name.endswith(suffix) and name[: -len(suffix)] in algebra_names():
            return fn(name[: -len(suffix)])
    if ":S" in name:
        base, k = name.rsplit(":S", 1)
        if base in algebra_names():
            return simples(base)[int(k)]
    from ..errors import BadParameters
    raise BadParameters(f"unknown catalog reference {ref!r}")
