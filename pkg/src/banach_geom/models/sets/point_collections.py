import math
from typing import List, Optional

import numpy as np
from pydantic import Field, field_validator, model_validator

from ..bases.base_model import GeomBaseModel
from ..enums.representation_enum import RepresentationEnum
from ..vectors.vector import Functional, Vector


def _coerce_rows(v, name: str) -> List[List[float]]:
    if isinstance(v, np.ndarray):
        v = v.tolist()
    if not isinstance(v, (list, tuple)):
        raise ValueError(f"{name} must be a list of coordinate lists")
    rows = []
    for row in v:
        if isinstance(row, (Vector, Functional)):
            row = row.coords
        values = [float(item) for item in np.asarray(row, dtype=float).ravel()]
        if not all(math.isfinite(item) for item in values):
            raise ValueError(f"{name} must be finite")
        rows.append(values)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError(f"all {name} must share one dimension")
    return rows


class _PointCollection(GeomBaseModel):
    """
    Finite point data describing a subset of R^n.

    ``points`` holds polytope vertices or cloud samples. When the set is a
    finite union of convex polytopes, ``pieces`` lists the vertex arrays of
    the pieces; a polytope without pieces is the convex hull of ``points``.
    ``mesh`` bounds how far any point of the described set is from the listed
    points (0 for exact vertex data).
    """
    points: List[List[float]] = Field(default_factory=list, alias="points")
    pieces: Optional[List[List[List[float]]]] = Field(None, alias="pieces")
    mesh: float = Field(0.0, alias="mesh", ge=0)
    exact: bool = Field(True, alias="exact")

    @field_validator("points", mode="before")
    @classmethod
    def check_points(cls, v):
        return _coerce_rows(v, "points")

    @field_validator("pieces", mode="before")
    @classmethod
    def check_pieces(cls, v):
        if v is None:
            return None
        return [_coerce_rows(piece, "piece vertices") for piece in v]

    @property
    def array(self) -> np.ndarray:
        if not self.points:
            return np.zeros((0, 0))
        return np.array(self.points, dtype=float)

    @property
    def is_empty(self) -> bool:
        return len(self.points) == 0

    @property
    def dim(self) -> Optional[int]:
        return len(self.points[0]) if self.points else None

    def piece_arrays(self) -> List[np.ndarray]:
        """Convex pieces as vertex arrays; every cloud point is its own piece."""
        if self.pieces:
            return [np.array(piece, dtype=float) for piece in self.pieces if piece]
        if self.is_polytope:
            return [self.array] if self.points else []
        return [row[None, :] for row in self.array]

    @property
    def is_polytope(self) -> bool:
        return True


class FaceSet(_PointCollection):
    """
    An exposed face S(X, f, 0), a union of faces such as A_0(x), or a sampled face.

    Examples:
        >>> face = FaceSet(points=[[1, -1], [1, 1]], exposing=Functional(coords=[1, 0]))
        >>> face.representation
        <RepresentationEnum.POLYTOPE: 'polytope'>
        >>> len(face.piece_arrays())
        1
    """
    representation: RepresentationEnum = Field(RepresentationEnum.POLYTOPE, alias="representation")
    exposing: Optional[Functional] = Field(None, alias="exposing")

    @model_validator(mode="after")
    def check_mesh(self):
        if self.representation == RepresentationEnum.CLOUD and not self.mesh > 0:
            raise ValueError("cloud faces need a positive mesh")
        return self

    @property
    def is_polytope(self) -> bool:
        return self.representation == RepresentationEnum.POLYTOPE


class RegionSample(_PointCollection):
    """
    Points of a slice S(X, f, delta) or of D[x, delta] / C[x, delta].

    Exact regions of polyhedral spaces carry their convex pieces; sampled
    regions are clouds whose points all satisfy the defining inequality.

    Examples:
        >>> region = RegionSample(points=[[1, 1], [1, 0.8], [0.8, 1]], defining="slice delta=0.1")
        >>> region.is_polytope
        True
    """
    defining: str = Field(..., alias="defining")

    @property
    def is_polytope(self) -> bool:
        return self.exact


class FunctionalSet(GeomBaseModel):
    """
    Extreme points of J(x), the set of norm-one functionals attaining 1 at ``anchor``.

    Examples:
        >>> J = FunctionalSet(functionals=[[0, 1], [1, 0]], anchor=Vector(coords=[1, 1]))
        >>> J.is_singleton
        False
    """
    functionals: List[List[float]] = Field(..., alias="functionals", min_length=1)
    anchor: Vector = Field(..., alias="anchor")
    representation: RepresentationEnum = Field(RepresentationEnum.POLYTOPE, alias="representation")

    @field_validator("functionals", mode="before")
    @classmethod
    def check_functionals(cls, v):
        return _coerce_rows(v, "functionals")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.functionals, dtype=float)

    @property
    def is_singleton(self) -> bool:
        return len(self.functionals) == 1

    def centroid(self) -> np.ndarray:
        return self.array.mean(axis=0)

    def as_functionals(self) -> List[Functional]:
        return [Functional(coords=row) for row in self.functionals]


class PointSet(GeomBaseModel):
    """
    A finite nonempty set K of points of the space.

    Examples:
        >>> K = PointSet(points=[[1, 1], [-1, -1]], label="pair")
        >>> K.array.shape
        (2, 2)
    """
    points: List[List[float]] = Field(..., alias="points", min_length=1)
    label: str = Field("K", alias="label")
    source_indices: Optional[List[int]] = Field(None, alias="source_indices")

    @field_validator("points", mode="before")
    @classmethod
    def check_points(cls, v):
        return _coerce_rows(v, "points")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=float)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)


class FarthestReport(GeomBaseModel):
    """Farthest-point data F_K(x) for a single query."""
    query: List[float] = Field(..., alias="query")
    far_distance: float = Field(..., alias="far_distance", ge=0)
    attaining: List[List[float]] = Field(..., alias="attaining")
    attaining_indices: List[int] = Field(..., alias="attaining_indices")
    unique: bool = Field(..., alias="unique")


class DensityReport(GeomBaseModel):
    """Share of sampled queries whose farthest point in K is unique."""
    fraction: float = Field(..., alias="fraction", ge=0, le=1)
    unique_count: int = Field(..., alias="unique_count", ge=0)
    samples: int = Field(..., alias="samples", gt=0)
    seed: int = Field(..., alias="seed")
    box_side: float = Field(..., alias="box_side", ge=0)
    warning: Optional[str] = Field(None, alias="warning")
