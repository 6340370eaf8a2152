"""Seeded random instances built from catalog constructors.

Nothing here invents structure constants: every random algebra is a catalog
algebra, and every random module is assembled from regular modules by taking
cyclic submodules, quotients, direct sums, socles and simple summands.
"""
from __future__ import annotations

import random

from .. import modules as MD
from . import instances as C


def rng_for(seed: int, label: str) -> random.Random:
    # string seeding is stable across processes (hashed with sha512 internally)
    return random.Random(f"{seed}:{label}")


def random_vector(K, n, rng):
    return [K.random(rng, 2) for _ in range(n)]


def random_module(name: str, rng: random.Random, max_dim: int = 12) -> tuple:
    """``(description, Module)`` for the catalog algebra ``name``."""
    E = C.get_algebra(name)
    R = C.regular(name)
    K = E.field
    kinds = ["regular", "cyclic", "quotient", "sum", "socle"]
    if E.group is not None:
        kinds.append("trivial")
    if E.radical_supported() and E.dim <= 8:
        kinds.append("simple")
    kind = rng.choice(kinds)
    if kind == "regular":
        return kind, R
    if kind == "trivial":
        return kind, C.trivial(name)
    if kind == "cyclic":
        v = random_vector(K, E.dim, rng)
        W = MD.spin(R, [v]) or R.identity_rows()
        return kind, MD.submodule(R, W, name=f"{name}:cyclic")
    if kind == "quotient":
        v = random_vector(K, E.dim, rng)
        W = MD.spin(R, [v])
        if len(W) == E.dim:
            W = []
        return kind, MD.quotient(R, W, name=f"{name}:quot").module
    if kind == "socle":
        if not E.radical_supported():
            return "regular", R
        return kind, MD.submodule(R, MD.socle(R), name=f"{name}:soc")
    if kind == "simple":
        S = C.simples(name)
        return kind, S[rng.randrange(len(S))]
    # sum of two smaller pieces
    a = random_module(name, rng, max_dim // 2)[1]
    b = random_module(name, rng, max_dim // 2)[1]
    if a.dim + b.dim > max_dim or a.dim + b.dim == 0:
        return "cyclic-sum-fallback", a if a.dim else R
    return kind, MD.direct_sum(a, b, name=f"{name}:sum")
