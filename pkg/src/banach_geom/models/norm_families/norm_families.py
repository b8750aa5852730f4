"""
Concrete norm families of the catalogue.

Each family is a pydantic model holding its parameters; the numerics live in
vectorised numpy methods. Closed forms are used wherever they exist:

- LpFamily: numpy norms, Hoelder conjugate for the dual, explicit vertex sets for p in {1, inf}
- PolytopeVFamily / PolytopeHFamily: vertex and facet lists, each converted into the other once
- OneTwoMixFamily: sqrt(|x|_1^2 + |x|_2^2) with a water-filling dual norm
- LensFamily: intersection of the discs |x -+ (d, 0)| <= R
- StadiumFamily: segment [(-c, 0), (c, 0)] plus the disc of radius r
"""

import itertools
import logging
import math
from typing import Any, ClassVar, Dict, List

import numpy as np
from pydantic import Field, PrivateAttr, field_serializer, field_validator, model_validator

from ..enums.norm_kind_enum import NormKindEnum
from .base_norm_family import BaseNormFamily, PolyhedralNormMixin
from ...utils.geom_errors import GeomInvalidParameterError
from ...utils.polytope_utils import (
    clean_rows,
    dedupe_rows,
    hull_vertex_indices,
    polar_vertices,
    sort_rows,
)

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-9
ZERO_TOL = 1e-12


def _check_symmetric(rows: np.ndarray, name: str) -> None:
    for row in rows:
        if not np.any(np.max(np.abs(rows + row), axis=1) <= SYMMETRY_TOL):
            raise ValueError(f"{name} must be symmetric: missing the negative of {row.tolist()}")


def _polar_or_invalid(rows: np.ndarray, name: str) -> np.ndarray:
    try:
        return polar_vertices(rows)
    except GeomInvalidParameterError as e:
        raise ValueError(f"{name} do not bound a polytope around the origin: {e}") from e


def _check_rows(v: Any, name: str) -> List[List[float]]:
    if isinstance(v, np.ndarray):
        v = v.tolist()
    if not isinstance(v, (list, tuple)) or len(v) == 0:
        raise ValueError(f"{name} must be a nonempty list of coordinate lists")
    width = None
    rows = []
    for row in v:
        if not isinstance(row, (list, tuple)):
            raise ValueError(f"each entry of {name} must be a coordinate list")
        values = [float(item) for item in row]
        if not all(math.isfinite(item) for item in values):
            raise ValueError(f"{name} must be finite")
        if width is None:
            width = len(values)
        elif width != len(values):
            raise ValueError(f"all entries of {name} must share one dimension")
        rows.append(values)
    return rows


class LpFamily(PolyhedralNormMixin, BaseNormFamily):
    """
    The l_p norm, p in [1, inf].

    Examples:
        >>> import numpy as np
        >>> LpFamily(p=2).support(np.array([[3.0, 4.0]]))
        array([5.])
        >>> LpFamily(p=1).conjugate
        inf
    """
    KIND: ClassVar[NormKindEnum] = NormKindEnum.LP

    p: float = Field(..., alias="p")

    @field_validator("p", mode="before")
    @classmethod
    def parse_p(cls, v):
        if isinstance(v, str):
            if v.strip().lower() in ("inf", "infinity", "∞"):
                return math.inf
            return float(v)
        return v

    @field_validator("p")
    @classmethod
    def check_p(cls, v):
        if math.isnan(v) or v < 1:
            raise ValueError(f"p must lie in [1, inf], got {v}")
        return v

    @field_serializer("p")
    def serialize_p(self, v: float):
        return "inf" if math.isinf(v) else v

    def parameters(self) -> Dict[str, Any]:
        return {"p": "inf" if math.isinf(self.p) else self.p}

    @property
    def conjugate(self) -> float:
        if self.p == 1:
            return math.inf
        if math.isinf(self.p):
            return 1.0
        return self.p / (self.p - 1.0)

    @property
    def _extreme(self) -> bool:
        return self.p == 1 or math.isinf(self.p)

    def is_polyhedral(self, dim: int) -> bool:
        return self._extreme

    def ball_vertices(self, dim: int):
        if self.p == 1:
            return sort_rows(np.vstack([np.eye(dim), -np.eye(dim)]))
        if math.isinf(self.p):
            return sort_rows(np.array(list(itertools.product([1.0, -1.0], repeat=dim))))
        return None

    def facet_normals(self, dim: int):
        if self.p == 1:
            return sort_rows(np.array(list(itertools.product([1.0, -1.0], repeat=dim))))
        if math.isinf(self.p):
            return sort_rows(np.vstack([np.eye(dim), -np.eye(dim)]))
        return None

    def gauge(self, X: np.ndarray) -> np.ndarray:
        return np.linalg.norm(X, ord=self.p, axis=1)

    def support(self, F: np.ndarray) -> np.ndarray:
        return np.linalg.norm(F, ord=self.conjugate, axis=1)

    def face_vertices(self, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        if self._extreme:
            return self._polytope_face_vertices(f, tol)
        q = self.conjugate
        dual = float(np.linalg.norm(f, ord=q))
        if dual == 0.0:
            return np.zeros((0, f.shape[0]))
        g = f / dual
        if self.p == 2:
            return g[None, :]
        x = np.sign(g) * np.abs(g) ** (q - 1.0)
        return (x / np.linalg.norm(x, ord=self.p))[None, :]

    def normal_cone_vertices(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        if self._extreme:
            return self._polytope_normal_cone_vertices(x, tol)
        u = x / np.linalg.norm(x, ord=self.p)
        if self.p == 2:
            return u[None, :]
        g = np.sign(u) * np.abs(u) ** (self.p - 1.0)
        return (g / np.linalg.norm(g, ord=self.conjugate))[None, :]

    def is_rotund(self, dim: int):
        return dim == 1 or not self._extreme

    def is_smooth(self, dim: int):
        return dim == 1 or not self._extreme

    def rotundity_witness(self, dim: int):
        if self.is_rotund(dim):
            return None
        return self._polytope_rotundity_witness(dim)

    def smoothness_witness(self, dim: int):
        if self.is_smooth(dim):
            return None
        return self._polytope_smoothness_witness(dim)


class _PolytopeFamily(PolyhedralNormMixin, BaseNormFamily):
    """Shared behaviour of the two polytope representations."""
    _vertices: np.ndarray = PrivateAttr(default=None)
    _normals: np.ndarray = PrivateAttr(default=None)

    @property
    def dimension(self) -> int:
        return int(self._vertices.shape[1])

    def validate_dimension(self, dim: int) -> None:
        if dim != self.dimension:
            raise ValueError(f"polytope lives in dimension {self.dimension}, space has dimension {dim}")

    def is_polyhedral(self, dim: int) -> bool:
        return True

    def ball_vertices(self, dim: int):
        return self._vertices

    def facet_normals(self, dim: int):
        return self._normals

    def gauge(self, X: np.ndarray) -> np.ndarray:
        return self._polytope_gauge(X)

    def support(self, F: np.ndarray) -> np.ndarray:
        return self._polytope_support(F)

    def face_vertices(self, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        return self._polytope_face_vertices(f, tol)

    def normal_cone_vertices(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        return self._polytope_normal_cone_vertices(x, tol)

    def is_rotund(self, dim: int):
        return dim == 1

    def is_smooth(self, dim: int):
        return dim == 1

    def rotundity_witness(self, dim: int):
        return None if dim == 1 else self._polytope_rotundity_witness(dim)

    def smoothness_witness(self, dim: int):
        return None if dim == 1 else self._polytope_smoothness_witness(dim)


class PolytopeVFamily(_PolytopeFamily):
    """
    Gauge of a symmetric polytope given by its vertices.

    Redundant points are dropped; the facet normals (vertices of the dual
    ball) are computed once by polarity.

    Examples:
        >>> import numpy as np
        >>> square = PolytopeVFamily(vertices=[[1, 1], [1, -1], [-1, 1], [-1, -1]])
        >>> square.gauge(np.array([[0.5, -2.0]]))
        array([2.])
    """
    KIND: ClassVar[NormKindEnum] = NormKindEnum.POLYTOPE_V

    vertices: List[List[float]] = Field(..., alias="vertices")

    @field_validator("vertices", mode="before")
    @classmethod
    def check_vertices(cls, v):
        return _check_rows(v, "vertices")

    @model_validator(mode="after")
    def check_shape(self):
        V = np.array(self.vertices, dtype=float)
        _check_symmetric(V, "vertices")
        if np.linalg.matrix_rank(V) < V.shape[1]:
            raise ValueError("vertices must span the whole space")
        if V.shape[1] == 1:
            r = float(np.max(np.abs(V)))
            self._vertices = np.array([[-r], [r]])
        else:
            self._vertices = sort_rows(clean_rows(dedupe_rows(V[hull_vertex_indices(V)])))
        self._normals = _polar_or_invalid(self._vertices, "vertices")
        logger.debug("PolytopeV: %d vertices, %d facets", len(self._vertices), len(self._normals))
        return self

    def parameters(self) -> Dict[str, Any]:
        return {"vertices": self.vertices}

    def to_h(self) -> "PolytopeHFamily":
        """The same ball described by its facet functionals."""
        return PolytopeHFamily(facets=self._normals.tolist())


class PolytopeHFamily(_PolytopeFamily):
    """
    Gauge of the symmetric polytope {x : g.x <= 1 for every facet functional g}.

    Supported in dimensions 1 to 3, where the ball vertices are enumerated once.

    Examples:
        >>> import numpy as np
        >>> diamond = PolytopeHFamily(facets=[[1, 1], [1, -1], [-1, 1], [-1, -1]])
        >>> diamond.gauge(np.array([[1.0, 0.0]]))
        array([1.])
    """
    KIND: ClassVar[NormKindEnum] = NormKindEnum.POLYTOPE_H

    facets: List[List[float]] = Field(..., alias="facets")

    @field_validator("facets", mode="before")
    @classmethod
    def check_facets(cls, v):
        return _check_rows(v, "facets")

    @model_validator(mode="after")
    def check_shape(self):
        W = np.array(self.facets, dtype=float)
        if W.shape[1] > 3:
            raise ValueError("facet representations are supported up to dimension 3; use polytope_v")
        _check_symmetric(W, "facets")
        if np.linalg.matrix_rank(W) < W.shape[1]:
            raise ValueError("facets must span the dual space (bounded intersection)")
        if W.shape[1] == 1:
            r = float(np.max(np.abs(W)))
            self._normals = np.array([[-r], [r]])
        else:
            self._normals = sort_rows(clean_rows(dedupe_rows(W[hull_vertex_indices(W)])))
        self._vertices = _polar_or_invalid(self._normals, "facets")
        return self

    def parameters(self) -> Dict[str, Any]:
        return {"facets": self.facets}

    def to_v(self) -> PolytopeVFamily:
        """The same ball described by its vertices."""
        return PolytopeVFamily(vertices=self._vertices.tolist())


class OneTwoMixFamily(BaseNormFamily):
    """
    The norm |x| = (|x|_1^2 + |x|_2^2)^(1/2).

    Rotund (the l_2 part is strictly convex) but not smooth where a coordinate
    vanishes. The dual norm has a closed form: with a = |f| and sigma the
    root of sigma = sum_i (a_i - sigma)_+, |f|* = (sigma^2 + sum_i (a_i - sigma)_+^2)^(1/2).

    Examples:
        >>> import numpy as np
        >>> OneTwoMixFamily().gauge(np.array([[1.0, 0.0]]))
        array([1.41421356])
    """
    KIND: ClassVar[NormKindEnum] = NormKindEnum.ONE_TWO_MIX

    def parameters(self) -> Dict[str, Any]:
        return {}

    def gauge(self, X: np.ndarray) -> np.ndarray:
        return np.sqrt(np.sum(np.abs(X), axis=1) ** 2 + np.sum(X * X, axis=1))

    @staticmethod
    def _threshold(A: np.ndarray) -> np.ndarray:
        # sigma = max_k (a_(1) + ... + a_(k)) / (k + 1) over the decreasing order statistics
        S = -np.sort(-A, axis=1)
        k = np.arange(1, A.shape[1] + 1)
        return np.max(np.cumsum(S, axis=1) / (k + 1.0), axis=1)

    def support(self, F: np.ndarray) -> np.ndarray:
        A = np.abs(F)
        sigma = self._threshold(A)
        excess = np.clip(A - sigma[:, None], 0.0, None)
        return np.sqrt(sigma ** 2 + np.sum(excess ** 2, axis=1))

    def face_vertices(self, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        A = np.abs(f)[None, :]
        sigma = self._threshold(A)
        excess = np.clip(A - sigma[:, None], 0.0, None)[0]
        dual = math.sqrt(float(sigma[0]) ** 2 + float(np.sum(excess ** 2)))
        if dual == 0.0:
            return np.zeros((0, f.shape[0]))
        return (np.sign(f) * excess / dual)[None, :]

    def normal_cone_vertices(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        u = x / float(self.gauge(x[None, :])[0])
        n1 = float(np.sum(np.abs(u)))
        zero = np.flatnonzero(np.abs(u) <= ZERO_TOL)
        rows = []
        for signs in itertools.product([-1.0, 1.0], repeat=len(zero)):
            s = np.sign(u)
            s[zero] = signs
            rows.append(n1 * s + np.where(np.abs(u) <= ZERO_TOL, 0.0, u))
        return sort_rows(np.array(rows))

    def is_rotund(self, dim: int):
        return True

    def is_smooth(self, dim: int):
        return dim == 1

    def smoothness_witness(self, dim: int):
        if dim == 1:
            return None
        e = np.zeros(dim)
        e[0] = 1.0
        return e / math.sqrt(2.0)


class LensFamily(BaseNormFamily):
    """
    Planar lens: the intersection of the discs of radius R centred at (d, 0) and (-d, 0).

    Rotund, with two corners at (0, +-(R^2 - d^2)^(1/2)) where it fails to be smooth.
    Each disc gauge is the positive root of t^2 (R^2 - d^2) + 2t<x, c> - |x|^2 = 0.

    Examples:
        >>> import numpy as np
        >>> lens = LensFamily(d=0.5, R=1.0)
        >>> float(lens.gauge(np.array([[0.5, 0.0]]))[0])
        1.0
    """
    KIND: ClassVar[NormKindEnum] = NormKindEnum.LENS

    d: float = Field(..., alias="d", gt=0)
    R: float = Field(..., alias="R", gt=0)

    @model_validator(mode="after")
    def check_radii(self):
        if not self.R > self.d:
            raise ValueError(f"lens needs R > d > 0, got d={self.d}, R={self.R}")
        return self

    def parameters(self) -> Dict[str, Any]:
        return {"d": self.d, "R": self.R}

    def validate_dimension(self, dim: int) -> None:
        if dim != 2:
            raise ValueError("lens norms are planar (dim = 2)")

    @property
    def centres(self) -> np.ndarray:
        return np.array([[self.d, 0.0], [-self.d, 0.0]])

    @property
    def corner_height(self) -> float:
        return math.sqrt(self.R ** 2 - self.d ** 2)

    def _disc_gauges(self, X: np.ndarray) -> np.ndarray:
        a = self.R ** 2 - self.d ** 2
        q = np.sum(X * X, axis=1)
        out = np.zeros((X.shape[0], 2))
        for i, c in enumerate(self.centres):
            b = 2.0 * (X @ c)
            root = np.sqrt(b * b + 4.0 * a * q)
            with np.errstate(divide="ignore", invalid="ignore"):
                t = np.where(b >= 0.0, 2.0 * q / (b + root), (root - b) / (2.0 * a))
            out[:, i] = np.where(q > 0.0, t, 0.0)
        return out

    def gauge(self, X: np.ndarray) -> np.ndarray:
        return np.max(self._disc_gauges(X), axis=1)

    def _support_candidates(self, f: np.ndarray) -> np.ndarray:
        h = self.corner_height
        u = f / np.linalg.norm(f)
        points = np.vstack([self.centres + self.R * u, [[0.0, h], [0.0, -h]]])
        feasible = self.gauge(points) <= 1.0 + 1e-12
        return points[feasible]

    def support(self, F: np.ndarray) -> np.ndarray:
        out = np.zeros(F.shape[0])
        for i, f in enumerate(F):
            if np.linalg.norm(f) > 0.0:
                out[i] = float(np.max(self._support_candidates(f) @ f))
        return out

    def face_vertices(self, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        if np.linalg.norm(f) == 0.0:
            return np.zeros((0, 2))
        points = self._support_candidates(f)
        values = points @ f
        best = points[values >= np.max(values) - 1e-12 * max(1.0, float(np.max(np.abs(values))))]
        return sort_rows(dedupe_rows(best, tol))[:1]

    def normal_cone_vertices(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        a = self.R ** 2 - self.d ** 2
        u = x / float(self.gauge(x[None, :])[0])
        t = self._disc_gauges(u[None, :])[0]
        rows = []
        for ti, c in zip(t, self.centres):
            if ti >= 1.0 - tol:
                rows.append((u - ti * c) / (a * ti + float(u @ c)))
        return sort_rows(dedupe_rows(np.array(rows), tol))

    def is_rotund(self, dim: int):
        return True

    def is_smooth(self, dim: int):
        return False

    def smoothness_witness(self, dim: int):
        return np.array([0.0, self.corner_height])


class StadiumFamily(BaseNormFamily):
    """
    Planar stadium: points within distance r of the segment [(-c, 0), (c, 0)].

    Smooth, but its two flat sides y = +-r are nontrivial exposed faces, so it
    is not rotund. The gauge t of (a, b) is b/r on the flat sides and
    otherwise the positive root of (r^2 - c^2) t^2 + 2c|a| t - (a^2 + b^2) = 0;
    the dual norm is c|f_1| + r|f|_2 (support of a Minkowski sum).

    Examples:
        >>> import numpy as np
        >>> stadium = StadiumFamily(c=0.5, r=1.0)
        >>> float(stadium.support(np.array([[0.0, 1.0]]))[0])
        1.0
        >>> stadium.gauge(np.array([[1.5, 0.0], [0.3, 2.0]])).tolist()
        [1.0, 2.0]
    """
    KIND: ClassVar[NormKindEnum] = NormKindEnum.STADIUM

    c: float = Field(..., alias="c", gt=0)
    r: float = Field(..., alias="r", gt=0)

    def parameters(self) -> Dict[str, Any]:
        return {"c": self.c, "r": self.r}

    def validate_dimension(self, dim: int) -> None:
        if dim != 2:
            raise ValueError("stadium norms are planar (dim = 2)")

    def gauge(self, X: np.ndarray) -> np.ndarray:
        a = np.abs(X[:, 0])
        b = np.abs(X[:, 1])
        flat = a * self.r <= self.c * b
        rho2 = a * a + b * b
        # root written as rho2 / (c a + sqrt(disc)), stable for r <= c
        disc = np.maximum(self.r ** 2 * rho2 - (self.c * b) ** 2, 0.0)
        denom = self.c * a + np.sqrt(disc)
        cap = rho2 / np.where(denom > 0.0, denom, 1.0)
        return np.where(flat, b / self.r, cap)

    def support(self, F: np.ndarray) -> np.ndarray:
        return self.c * np.abs(F[:, 0]) + self.r * np.linalg.norm(F, axis=1)

    def face_vertices(self, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        norm_f = float(np.linalg.norm(f))
        if norm_f == 0.0:
            return np.zeros((0, 2))
        if abs(f[0]) <= ZERO_TOL * norm_f:
            y = self.r * math.copysign(1.0, f[1])
            return np.array([[-self.c, y], [self.c, y]])
        return (np.array([math.copysign(self.c, f[0]), 0.0]) + self.r * f / norm_f)[None, :]

    def normal_cone_vertices(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        u = x / float(self.gauge(x[None, :])[0])
        nearest = np.array([min(max(u[0], -self.c), self.c), 0.0])
        n = u - nearest
        n = n / np.linalg.norm(n)
        return (n / (self.c * abs(n[0]) + self.r))[None, :]

    def is_rotund(self, dim: int):
        return False

    def is_smooth(self, dim: int):
        return True

    def rotundity_witness(self, dim: int):
        return np.array([0.0, 1.0 / self.r])
