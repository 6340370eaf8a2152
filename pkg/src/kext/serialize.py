"""JSON instance files.

Fields are catalog names (``"GF4"``) or tower objects
``{"base": "Q" | {"GF": p}, "steps": [...]}``.  Algebras and modules accept a
few shorthands next to the explicit structure-constant / action-matrix form::

    {"group": "C3", "field": "Q"}
    {"quaternion": [-1, -1], "field": "Q"}
    {"polyquotient": [0, 0, 1], "field": "GF2"}
    {"triangular": 2, "field": "Q", "lower": false}
    {"matrix": 2, "field": "GF3"}
    {"product": [<algebra>, <algebra>]}
    {"field": "Q", "structure_constants": [[[...]]], "unit": [...]}

    {"regular": true} | {"trivial": true} | {"simple": 1}
    {"permutation": ["(0 1 2)"], "degree": 3}
    {"action": [[["1", "0"], ["0", "1"]], ...]}

Any of these may instead be the string ``"catalog:NAME"``.  Named references are
first looked up as ``NAME.json`` in ``$KEXT_CATALOG_DIR`` (or the bundled
``kext/catalog`` directory) and then in the built-in catalog.
"""
from __future__ import annotations

import json
import os
from pathlib import Path

from . import algebra as A
from . import modules as MD
from .errors import BadModule, BadParameters
from .exactnum import linalg as L
from .exactnum.fields import Field, named_field, tower_from_json

BUILTIN_DIR = Path(__file__).parent / "catalog"


def catalog_dir() -> Path:
    env = os.environ.get("KEXT_CATALOG_DIR")
    return Path(env) if env else BUILTIN_DIR


def _catalog_file(name: str):
    safe = name.replace("/", "_")
    for d in (catalog_dir(), BUILTIN_DIR):
        p = d / f"{safe}.json"
        if p.is_file():
            return json.loads(p.read_text())
    return None


def _resolve(ref: str):
    """``catalog:NAME`` -> parsed JSON from a catalog file, or a live catalog object."""
    name = ref[len("catalog:"):]
    data = _catalog_file(name)
    if data is not None:
        return data
    from .properties.instances import lookup
    return lookup(name)


def load_json_arg(text: str):
    """A command-line argument: catalog reference, path to a JSON file, or inline JSON."""
    if text.startswith("catalog:"):
        return text
    p = Path(text)
    if p.is_file():
        return json.loads(p.read_text())
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text  # a bare name such as "GF4"


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

def load_field(spec) -> Field:
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, str):
        if spec.startswith("catalog:"):
            obj = _resolve(spec)
            return obj if isinstance(obj, Field) else load_field(obj)
        return named_field(spec)
    if isinstance(spec, dict):
        return tower_from_json(spec)
    raise BadParameters(f"cannot read a field from {spec!r}")


def field_to_json(K: Field):
    from .properties.instances import FIELDS, field_name
    name = field_name(K)
    return name if name in FIELDS else K.to_json()


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------

def load_algebra(obj) -> A.Algebra:
    if isinstance(obj, A.Algebra):
        return obj
    if isinstance(obj, str):
        if not obj.startswith("catalog:"):
            obj = "catalog:" + obj
        res = _resolve(obj)
        if isinstance(res, A.Algebra):
            return res
        if isinstance(res, dict):
            return load_algebra(res)
        raise BadParameters(f"{obj} is not an algebra")
    if not isinstance(obj, dict):
        raise BadParameters(f"cannot read an algebra from {obj!r}")
    name = obj.get("name")
    if "catalog" in obj:
        return load_algebra("catalog:" + obj["catalog"])
    if "product" in obj:
        parts = [load_algebra(x) for x in obj["product"]]
        return A.product_algebra(*parts, name=name)
    K = load_field(obj.get("field", "Q"))
    if "group" in obj:
        return A.group_algebra(obj["group"], K, name=name)
    if "cayley" in obj:
        return A.group_algebra(obj["cayley"], K, name=name)
    if "quaternion" in obj:
        a, b = obj["quaternion"]
        return A.quaternion_algebra(K.coerce(a), K.coerce(b), K, name=name)
    if "polyquotient" in obj:
        return A.polyquotient(obj["polyquotient"], K, name=name)
    if "triangular" in obj:
        return A.triangular_algebra(int(obj["triangular"]), K, lower=bool(obj.get("lower")),
                                    name=name)
    if "matrix" in obj:
        return A.matrix_algebra(int(obj["matrix"]), K, name=name)
    if "structure_constants" in obj:
        sc = obj["structure_constants"]
        unit = obj.get("unit")
        if unit is None:
            raise BadParameters("explicit algebras need a unit vector")
        return A.build_algebra(K, sc, unit, name=name)
    raise BadParameters("algebra JSON needs one of: group, cayley, quaternion, polyquotient, "
                        "triangular, matrix, product, structure_constants")


def algebra_to_json(E: A.Algebra) -> dict:
    K = E.field
    f = K.format
    out = {"name": E.name, "field": field_to_json(K), "dim": E.dim}
    if E.group is not None:
        out["cayley"] = [list(r) for r in E.group.table]
    out["structure_constants"] = [[[f(c) for c in cell] for cell in row] for row in E.sc]
    out["unit"] = [f(c) for c in E.unit]
    return out


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

def load_module(obj, alg: A.Algebra | None = None) -> MD.Module:
    if isinstance(obj, MD.Module):
        return obj
    if isinstance(obj, str):
        if not obj.startswith("catalog:"):
            obj = "catalog:" + obj
        res = _resolve(obj)
        if isinstance(res, MD.Module):
            return res
        if isinstance(res, dict):
            return load_module(res, alg)
        raise BadModule(f"{obj} is not a module")
    if not isinstance(obj, dict):
        raise BadModule(f"cannot read a module from {obj!r}")
    if "algebra" in obj:
        alg = load_algebra(obj["algebra"])
    if alg is None:
        raise BadModule("module JSON needs an algebra (in the file or via --algebra)")
    name = obj.get("name")
    if obj.get("regular"):
        M = alg.regular_module()
    elif obj.get("trivial"):
        M = MD.trivial_module(alg)
    elif "simple" in obj:
        summands = MD.decompose(alg.regular_module()).summands
        k = int(obj["simple"])
        if not 0 <= k < len(summands):
            raise BadModule(f"simple index {k} out of range ({len(summands)} classes)")
        M = summands[k].module
    elif "permutation" in obj:
        M = MD.permutation_module(alg, obj["permutation"], obj.get("degree"))
    elif "action" in obj:
        K = alg.field
        mats = [L.Mat.parse(K, m) for m in obj["action"]]
        dim = obj.get("dim", mats[0].nrows if mats else 0)
        for X in mats:
            if X.nrows == 0:
                X.ncols = dim
        M = MD.Module(alg, mats, check=True, dim=dim)
    else:
        raise BadModule("module JSON needs one of: regular, trivial, simple, permutation, action")
    if name:
        M.name = name
    return M


def module_to_json(M: MD.Module, include_algebra: bool = True) -> dict:
    out = {"name": M.name, "dim": M.dim, "action": [X.to_strings() for X in M.action]}
    if include_algebra:
        out["algebra"] = algebra_to_json(M.alg)
    return out
