import math
from typing import List, Optional, Sequence

import numpy as np
from pydantic import AliasChoices, Field, field_validator, model_validator

from ..bases.base_model import GeomBaseModel


class _Coordinates(GeomBaseModel):
    """Finite real coordinate list with its dimension; shared by Vector and Functional."""
    coords: List[float] = Field(..., alias="Coords", min_length=1)
    dim: Optional[int] = Field(None, alias="Dim", gt=0)

    @field_validator("coords", mode="before")
    @classmethod
    def check_coords(cls, v):
        if isinstance(v, np.ndarray):
            v = v.tolist()
        if not isinstance(v, (list, tuple)):
            raise ValueError("coords must be a list of numbers")
        out = []
        for item in v:
            if isinstance(item, bool) or not isinstance(item, (int, float, np.integer, np.floating)):
                raise ValueError("each coordinate must be a number")
            item = float(item)
            if not math.isfinite(item):
                raise ValueError("coordinates must be finite")
            out.append(item)
        return out

    @model_validator(mode="after")
    def check_dim(self):
        if self.dim is None:
            object.__setattr__(self, "dim", len(self.coords))
        elif self.dim != len(self.coords):
            raise ValueError(f"coords length {len(self.coords)} does not match dim {self.dim}")
        return self

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=float)

    @classmethod
    def of(cls, values: Sequence[float]):
        return cls(coords=[float(v) for v in np.asarray(values, dtype=float).ravel()])

    def equals_within_tolerance(self, other, tolerance: float = 1e-9) -> bool:
        if not isinstance(other, _Coordinates) or other.dim != self.dim:
            return False
        return bool(np.max(np.abs(self.array - other.array)) <= tolerance)


class Vector(_Coordinates):
    """
    Element of the space R^n.

    Examples:
        >>> Vector(coords=[1, 1]).dim
        2
    """


class Functional(_Coordinates):
    """
    Element of the dual space; acts on vectors by the standard pairing.

    Coefficients are accepted under ``coeffs`` as well as ``coords``.

    Examples:
        >>> Functional(coords=[0.5, 0.5]).evaluate([1.0, 1.0])
        1.0
        >>> Functional.model_validate({"coeffs": [1, 0]}).coeffs
        [1.0, 0.0]
    """
    coords: List[float] = Field(
        ..., validation_alias=AliasChoices("Coeffs", "coeffs", "Coords", "coords"), min_length=1
    )

    @property
    def coeffs(self) -> List[float]:
        return self.coords

    def evaluate(self, x) -> float:
        values = x.array if isinstance(x, _Coordinates) else np.asarray(x, dtype=float)
        return float(self.array @ values)


class OperatorMatrix(GeomBaseModel):
    """
    Square real matrix acting on R^n, parsed from row-major nested lists.

    Examples:
        >>> T = OperatorMatrix(entries=[[0, 1], [0, 0]])
        >>> T.dim
        2
    """
    entries: List[List[float]] = Field(..., alias="Entries")
    dim: Optional[int] = Field(None, alias="Dim", gt=0)

    @field_validator("entries", mode="before")
    @classmethod
    def check_entries(cls, v):
        if isinstance(v, np.ndarray):
            v = v.tolist()
        if not isinstance(v, (list, tuple)) or len(v) == 0:
            raise ValueError("entries must be a nonempty list of rows")
        n = len(v)
        rows = []
        for row in v:
            if not isinstance(row, (list, tuple, np.ndarray)) or len(row) != n:
                raise ValueError("entries must form a square matrix")
            values = [float(item) for item in row]
            if not all(math.isfinite(item) for item in values):
                raise ValueError("entries must be finite")
            rows.append(values)
        return rows

    @model_validator(mode="after")
    def check_dim(self):
        if self.dim is None:
            object.__setattr__(self, "dim", len(self.entries))
        elif self.dim != len(self.entries):
            raise ValueError(f"matrix size {len(self.entries)} does not match dim {self.dim}")
        return self

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    @classmethod
    def of(cls, matrix) -> "OperatorMatrix":
        return cls(entries=np.asarray(matrix, dtype=float).tolist())

    @classmethod
    def identity(cls, dim: int) -> "OperatorMatrix":
        return cls.of(np.eye(dim))

    def apply(self, x) -> np.ndarray:
        values = x.array if isinstance(x, _Coordinates) else np.asarray(x, dtype=float)
        return self.array @ values
