"""
Data types of the geometry lab.

Pydantic models for vectors, functionals and operators, norm families, the
normed space itself, point sets and faces, and the verdicts and reports the
checkers produce.
"""

from .enums import (
    GeneratorKindEnum,
    NormKindEnum,
    PropertyNameEnum,
    RepresentationEnum,
    VerdictStatusEnum,
)
from .vectors import Functional, OperatorMatrix, Vector
from .norm_families import (
    BaseNormFamily,
    LensFamily,
    LpFamily,
    OneTwoMixFamily,
    PolytopeHFamily,
    PolytopeVFamily,
    StadiumFamily,
    create_norm_family,
)
from .spaces import NormedSpace
from .sets import DensityReport, FaceSet, FarthestReport, FunctionalSet, PointSet, RegionSample
from .reports import FunctionalTrace, ProbeConfig, ProbeReport, SpectrumReport, SuiteReport, Verdict

__all__ = [
    "GeneratorKindEnum",
    "NormKindEnum",
    "PropertyNameEnum",
    "RepresentationEnum",
    "VerdictStatusEnum",
    "Vector",
    "Functional",
    "OperatorMatrix",
    "BaseNormFamily",
    "LpFamily",
    "PolytopeVFamily",
    "PolytopeHFamily",
    "OneTwoMixFamily",
    "LensFamily",
    "StadiumFamily",
    "create_norm_family",
    "NormedSpace",
    "FaceSet",
    "RegionSample",
    "FunctionalSet",
    "PointSet",
    "FarthestReport",
    "DensityReport",
    "ProbeConfig",
    "Verdict",
    "FunctionalTrace",
    "ProbeReport",
    "SpectrumReport",
    "SuiteReport",
]
