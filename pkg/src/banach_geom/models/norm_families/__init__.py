"""
Norm families.

Each family class turns a handful of parameters into a norm on R^n together
with its dual norm, exposed faces and duality map.
"""

from .base_norm_family import BaseNormFamily, PolyhedralNormMixin
from .norm_families import (
    LensFamily,
    LpFamily,
    OneTwoMixFamily,
    PolytopeHFamily,
    PolytopeVFamily,
    StadiumFamily,
)
from .norm_family_factory import (
    NORM_FAMILY_CLASS_MAP,
    create_norm_family,
    family_from_descriptor,
    get_family_class,
)

__all__ = [
    "BaseNormFamily",
    "PolyhedralNormMixin",
    "LpFamily",
    "PolytopeVFamily",
    "PolytopeHFamily",
    "OneTwoMixFamily",
    "LensFamily",
    "StadiumFamily",
    "NORM_FAMILY_CLASS_MAP",
    "create_norm_family",
    "family_from_descriptor",
    "get_family_class",
]
