from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Optional

import numpy as np

from ..bases.base_model import GeomBaseModel
from ..enums.norm_kind_enum import NormKindEnum
from ...utils.polytope_utils import lexsort_rows, sort_rows, support_indices


class BaseNormFamily(GeomBaseModel, ABC):
    """
    Abstract base class for norm families.

    A norm family knows how to evaluate its gauge and its dual norm on stacked
    row vectors, and how to describe exposed faces of the unit ball and the
    duality map J exactly. Families that are polyhedral additionally expose
    the vertices of the ball and the vertices of the dual ball (facet normals).

    All array methods take 2-D arrays of shape (m, n) and return shape (m,)
    unless stated otherwise; single-vector methods take shape (n,).

    Examples:
        >>> from banach_geom.models.norm_families import LpFamily
        >>> import numpy as np
        >>> LpFamily(p="inf").gauge(np.array([[1.0, -3.0]]))
        array([3.])
    """
    KIND: ClassVar[NormKindEnum]

    @property
    def kind(self) -> NormKindEnum:
        return self.KIND

    # -- parameters -----------------------------------------------------------------

    @abstractmethod
    def parameters(self) -> Dict[str, Any]:
        """JSON parameters of the family, without the kind tag."""

    def to_descriptor(self) -> Dict[str, Any]:
        return {"kind": self.KIND.value, **self.parameters()}

    def validate_dimension(self, dim: int) -> None:
        """Raise ValueError when the family cannot live in dimension dim."""

    # -- norms ----------------------------------------------------------------------

    @abstractmethod
    def gauge(self, X: np.ndarray) -> np.ndarray:
        """Norm of each row of X."""

    @abstractmethod
    def support(self, F: np.ndarray) -> np.ndarray:
        """Dual norm of each row of F (support function of the unit ball)."""

    # -- faces and duality ----------------------------------------------------------

    @abstractmethod
    def face_vertices(self, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        """Vertices of the exposed face {x in B_X : f(x) = |f|*} (lexicographically sorted)."""

    @abstractmethod
    def normal_cone_vertices(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        """Extreme points of J(x/|x|), the norming functionals of x (lexicographically sorted)."""

    # -- classification -------------------------------------------------------------

    def is_polyhedral(self, dim: int) -> bool:
        return False

    def ball_vertices(self, dim: int) -> Optional[np.ndarray]:
        return None

    def facet_normals(self, dim: int) -> Optional[np.ndarray]:
        return None

    def is_rotund(self, dim: int) -> Optional[bool]:
        """True/False when known in closed form, None when it has to be sampled."""
        return None

    def is_smooth(self, dim: int) -> Optional[bool]:
        return None

    def rotundity_witness(self, dim: int) -> Optional[np.ndarray]:
        """A dual-unit functional whose exposed face has two points, when known."""
        return None

    def smoothness_witness(self, dim: int) -> Optional[np.ndarray]:
        """A unit vector with two distinct norming functionals, when known."""
        return None


class PolyhedralNormMixin:
    """
    Exact face and duality computations for polyhedral balls.

    Needs ball_vertices(dim) and facet_normals(dim) with the normalisation
    B_X = {x : w.x <= 1 for every facet normal w}.
    """

    def _polytope_gauge(self, X: np.ndarray) -> np.ndarray:
        W = self.facet_normals(X.shape[1])
        return np.maximum(np.max(X @ W.T, axis=1), 0.0)

    def _polytope_support(self, F: np.ndarray) -> np.ndarray:
        V = self.ball_vertices(F.shape[1])
        return np.maximum(np.max(F @ V.T, axis=1), 0.0)

    def _polytope_face_vertices(self, f: np.ndarray, tol: float) -> np.ndarray:
        V = self.ball_vertices(f.shape[0])
        scale = max(1.0, float(np.max(np.abs(V @ f))))
        return sort_rows(V[support_indices(V, f, tol * scale)])

    def _polytope_normal_cone_vertices(self, x: np.ndarray, tol: float) -> np.ndarray:
        W = self.facet_normals(x.shape[0])
        scale = max(1.0, float(np.max(np.abs(W @ x))))
        return sort_rows(W[support_indices(W, x, tol * scale)])

    def _polytope_rotundity_witness(self, dim: int, tol: float = 1e-9) -> Optional[np.ndarray]:
        W = self.facet_normals(dim)
        best, best_diam = None, 0.0
        for w in W[lexsort_rows(W, descending=True)]:
            face = self._polytope_face_vertices(w, tol)
            diam = max((np.linalg.norm(a - b) for a in face for b in face), default=0.0)
            if diam > best_diam + tol:
                best, best_diam = w, diam
        return best

    def _polytope_smoothness_witness(self, dim: int, tol: float = 1e-9) -> Optional[np.ndarray]:
        V = self.ball_vertices(dim)
        for v in V[lexsort_rows(V, descending=True)]:
            if len(self._polytope_normal_cone_vertices(v, tol)) > 1:
                return v
        return None
