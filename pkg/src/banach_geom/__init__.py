"""
Geometry lab for finite-dimensional normed spaces.

Build a space from a norm family, then compute faces, slices and the
D-sets around sphere points, certify rotundity, smoothness, ACS, HLUR and
slice shrinkage, probe the Daugavet equation and run farthest-point
experiments.

Examples:
    >>> from banach_geom import NormedSpace, check_hlur
    >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
    >>> check_hlur(linf).status.value
    'fails'
"""

from .models import *  # noqa: F401,F403
from .models import __all__ as _models_all
from .geometry import *  # noqa: F401,F403
from .geometry import __all__ as _geometry_all
from .harness import *  # noqa: F401,F403
from .harness import __all__ as _harness_all
from .utils.geom_errors import (
    GeomAssertionError,
    GeomDimensionMismatchError,
    GeomEmptySetError,
    GeomError,
    GeomInvalidParameterError,
    GeomNonFiniteInputError,
    GeomNotOnSphereError,
    GeomUnknownGeneratorError,
    GeomUnknownLabelError,
    GeomUnknownPropertyError,
    GeomUnsupportedSpaceError,
    GeomZeroVectorError,
)

__version__ = "0.1.0"

__all__ = [
    *_models_all,
    *_geometry_all,
    *_harness_all,
    "GeomError",
    "GeomDimensionMismatchError",
    "GeomNonFiniteInputError",
    "GeomZeroVectorError",
    "GeomNotOnSphereError",
    "GeomEmptySetError",
    "GeomInvalidParameterError",
    "GeomUnsupportedSpaceError",
    "GeomUnknownLabelError",
    "GeomUnknownPropertyError",
    "GeomUnknownGeneratorError",
    "GeomAssertionError",
]
