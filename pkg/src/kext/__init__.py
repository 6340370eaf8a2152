"""Exact scalar extension of module categories over finite-dimensional algebras."""
from .algebra import (Algebra, group_algebra, matrix_algebra, polyquotient, product_algebra,
                      quaternion_algebra, triangular_algebra)
from .errors import KextError, TooLarge, UnsupportedField
from .exactnum.fields import GF, QQ, algebraic, named_field, transcendental
from .modules import Module, decompose, hom_space, socle, socle_filtration
from .scalarext import TowerInclusion, extend_algebra, split_simple, t_extend_module

__version__ = "0.1.0"

__all__ = [
    "Algebra", "GF", "KextError", "Module", "QQ", "TooLarge", "TowerInclusion",
    "UnsupportedField", "algebraic", "decompose", "extend_algebra", "group_algebra",
    "hom_space", "matrix_algebra", "named_field", "polyquotient", "product_algebra",
    "quaternion_algebra", "socle", "socle_filtration", "split_simple", "t_extend_module",
    "transcendental", "triangular_algebra",
]
