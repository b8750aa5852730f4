from .point_collections import (
    DensityReport,
    FaceSet,
    FarthestReport,
    FunctionalSet,
    PointSet,
    RegionSample,
)

__all__ = [
    "FaceSet",
    "RegionSample",
    "FunctionalSet",
    "PointSet",
    "FarthestReport",
    "DensityReport",
]
