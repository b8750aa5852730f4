"""
Small exact helpers for symmetric polytopes in dimension 1-3.

Vertex enumeration is brute force over n-subsets of the constraints, which is
exact and cheap for the handful of facets the catalogue bodies have and, unlike
qhull, copes with degenerate (flat) slices such as the delta = 0 slice.
"""

import itertools
import logging

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .geom_errors import GeomInvalidParameterError

logger = logging.getLogger(__name__)

ZERO_SNAP = 1e-15


def clean_rows(X: np.ndarray) -> np.ndarray:
    """Snap floating noise around zero to an exact 0.0 (also removes -0.0)."""
    X = np.array(X, dtype=float)
    X[np.abs(X) < ZERO_SNAP] = 0.0
    return X


def dedupe_rows(X: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Drop rows within max-abs distance tol of an earlier row; keeps first occurrences."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    kept = []
    for row in X:
        if not any(np.max(np.abs(row - k)) <= tol for k in kept):
            kept.append(row)
    if not kept:
        return np.zeros((0, X.shape[1]))
    return np.array(kept)


def lexsort_rows(X: np.ndarray, descending: bool = False) -> np.ndarray:
    """Return the row permutation sorting X lexicographically (first column primary)."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[0] == 0:
        return np.zeros(0, dtype=int)
    order = np.lexsort(X.T[::-1])
    return order[::-1] if descending else order


def sort_rows(X: np.ndarray, descending: bool = False) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    return X[lexsort_rows(X, descending=descending)]


def enumerate_vertices(A: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """
    Vertices of the bounded polyhedron {x : A x <= b}.

    Args:
        A: (m, n) constraint matrix
        b: (m,) right-hand side
        tol: feasibility and merge tolerance

    Returns:
        np.ndarray: (k, n) vertex array, lexicographically sorted; empty when infeasible
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    found = []
    for rows in itertools.combinations(range(m), n):
        idx = list(rows)
        sub = A[idx]
        if np.linalg.cond(sub) > 1e12:
            continue
        v = np.linalg.solve(sub, b[idx])
        if np.all(A @ v <= b + tol * (1.0 + np.abs(b))):
            found.append(v)
    if not found:
        return np.zeros((0, n))
    return sort_rows(clean_rows(dedupe_rows(np.array(found), tol=tol)))


def polar_vertices(points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """
    Vertices of the polar {y : y.p <= 1 for all p} of conv(points).

    The origin must be an interior point of conv(points). Each facet
    a.x + c = 0 (c < 0) of the hull contributes the polar vertex a / (-c).

    Raises:
        GeomInvalidParameterError: If the hull is degenerate or does not contain the origin
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    n = P.shape[1]
    if n == 1:
        radius = float(np.max(np.abs(P[:, 0])))
        if radius <= tol or np.min(P[:, 0]) >= -tol:
            raise GeomInvalidParameterError(
                "Origin must be interior to the polytope", error_code="PARAM", problem_data={"points": P.tolist()}
            )
        return sort_rows(np.array([[1.0 / np.max(P[:, 0])], [1.0 / np.min(P[:, 0])]]))
    try:
        hull = ConvexHull(P)
    except QhullError as exc:
        raise GeomInvalidParameterError(
            f"Degenerate polytope: {exc}", error_code="PARAM", problem_data={"points": P.tolist()}
        ) from exc
    normals = hull.equations[:, :-1]
    offsets = hull.equations[:, -1]
    if np.any(offsets >= -tol):
        raise GeomInvalidParameterError(
            "Origin must be interior to the polytope", error_code="PARAM", problem_data={"points": P.tolist()}
        )
    Y = normals / (-offsets)[:, None]
    logger.debug("polar_vertices: %d facets -> %d polar vertices", len(offsets), len(dedupe_rows(Y, tol)))
    return sort_rows(clean_rows(dedupe_rows(Y, tol=tol)))


def affine_basis(points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal rows spanning the affine hull of a point set, shape (rank, dim)."""
    P = np.atleast_2d(np.asarray(points, dtype=float))
    _, s, Vt = np.linalg.svd(P - P.mean(axis=0), full_matrices=False)
    scale = max(1.0, float(np.max(np.abs(P))))
    return Vt[s > tol * scale]


def hull_vertex_indices(points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """
    Indices of the Euclidean convex-hull vertices of a point set (sorted).

    Flat sets are hulled inside their affine hull, so collinear points keep
    only their two ends. Repeated points contribute one index.

    Examples:
        >>> hull_vertex_indices(np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])).tolist()
        [0, 2]
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    basis = affine_basis(P, tol)
    if len(basis) == 0:
        return np.array([0])
    Y = (P - P.mean(axis=0)) @ basis.T
    if Y.shape[1] == 1:
        return np.unique([int(np.argmin(Y[:, 0])), int(np.argmax(Y[:, 0]))])
    try:
        hull = ConvexHull(Y)
    except QhullError:
        logger.warning("hull_vertex_indices: nearly flat point set, joggling")
        hull = ConvexHull(Y, qhull_options="QJ")
    return np.sort(hull.vertices)


def support_indices(V: np.ndarray, f: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Indices of the rows of V that maximise f within tol."""
    values = np.asarray(V, dtype=float) @ np.asarray(f, dtype=float)
    return np.flatnonzero(values >= np.max(values) - tol)
