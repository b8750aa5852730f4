from typing import List

from pydantic import Field

from ..bases.base_model import GeomBaseModel
from ..enums.generator_kind_enum import GeneratorKindEnum


class FunctionalTrace(GeomBaseModel):
    """Trajectories of f(x_n) and d(x_n, S(X, f, 0)) for one norming functional f of x."""
    functional: List[float] = Field(..., alias="functional")
    values: List[float] = Field(..., alias="values")
    face_distances: List[float] = Field(..., alias="face_distances")
    tends_to_one: bool = Field(..., alias="tends_to_one")
    tends_to_face: bool = Field(..., alias="tends_to_face")


class ProbeReport(GeomBaseModel):
    """
    Measurements along a sphere sequence x_n with |x_n + x| -> 2.

    No verdict is drawn; the flags only summarise the final terms.
    """
    point: List[float] = Field(..., alias="point")
    generator: GeneratorKindEnum = Field(..., alias="generator")
    sequence: List[List[float]] = Field(..., alias="sequence")
    norm_sums: List[float] = Field(..., alias="norm_sums")
    distances_to_point: List[float] = Field(..., alias="distances_to_point")
    traces: List[FunctionalTrace] = Field(..., alias="traces")
    converges_to_point: bool = Field(..., alias="converges_to_point")
    local_u_convex: bool = Field(..., alias="local_u_convex")
    strongly_local_u_convex: bool = Field(..., alias="strongly_local_u_convex")
    approaches_all_faces: bool = Field(..., alias="approaches_all_faces")
