"""Exact scalars: field towers, polynomials, factorisation and dense linear algebra."""
from .fields import GF, QQ, Field, algebraic, named_field, tower_build, transcendental
from .kernels import BACKEND

__all__ = ["BACKEND", "GF", "QQ", "Field", "algebraic", "named_field", "tower_build",
           "transcendental"]
