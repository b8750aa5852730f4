"""
Farthest points of finite sets: F_K(x), Far K, uniqueness density and hull equality.

K is always a finite list, so every supremum is an exact maximum over K.
"""

import logging
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from ..models.enums.verdict_status_enum import VerdictStatusEnum
from ..models.reports.probe_config import ProbeConfig
from ..models.reports.verdict import Verdict
from ..models.sets.point_collections import DensityReport, FarthestReport, PointSet
from ..models.spaces.normed_space import NormedSpace
from ..utils.geom_errors import GeomEmptySetError, GeomInvalidParameterError, GeomUnsupportedSpaceError
from ..utils.polytope_utils import dedupe_rows, hull_vertex_indices
from ..utils.rng import derive_rng, resolve_seed
from .norms import PointLike, as_array, ball_sample_array
from .properties import check_hlur

logger = logging.getLogger(__name__)

SetInput = Union[PointSet, Sequence[Sequence[float]], np.ndarray]

UNIQUENESS_TOL = 1e-6
RAY_RADII = (3.0, 100.0, 1e4)
QUERY_BATCH = 4096
HULL_MATCH_TOL = 1e-9


def _points(space: NormedSpace, K: SetInput) -> np.ndarray:
    if isinstance(K, PointSet):
        P = K.array
    else:
        P = np.asarray(K, dtype=float)
        if P.ndim == 1 and P.size:
            P = P.reshape(-1, space.dim)
    if P.size == 0:
        raise GeomEmptySetError("K must be nonempty", error_code="EMPTY")
    return np.array([as_array(space, row, "k") for row in P])


def _diameter(space: NormedSpace, P: np.ndarray) -> float:
    if len(P) < 2:
        return 0.0
    diffs = (P[:, None, :] - P[None, :, :]).reshape(-1, space.dim)
    return float(np.max(space.norms(diffs)))


def _distance_table(space: NormedSpace, Q: np.ndarray, P: np.ndarray) -> np.ndarray:
    """|q - k| for every query row q and point k, shape (len(Q), len(P))."""
    diffs = (Q[:, None, :] - P[None, :, :]).reshape(-1, space.dim)
    return space.norms(diffs).reshape(len(Q), len(P))


def farthest_distance(space: NormedSpace, x: PointLike, K: SetInput) -> float:
    """
    sup{|x - k| : k in K}.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> farthest_distance(linf, [2, 0], [[1, 1], [1, -1], [-1, 1], [-1, -1]])
        3.0
    """
    values = as_array(space, x)
    P = _points(space, K)
    return float(np.max(space.norms(values[None, :] - P)))


def farthest_points(space: NormedSpace, x: PointLike, K: SetInput, tol: float = UNIQUENESS_TOL) -> FarthestReport:
    """
    F_K(x): the points of K within tol of the farthest distance.

    ``unique`` holds when the attaining points collapse to one point after
    clustering at tol, so repeated entries of K do not count as ties.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> l2 = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": 2}})
        >>> report = farthest_points(l2, [2, 0], [[1, 1], [1, -1], [-1, 1], [-1, -1]])
        >>> report.attaining, report.unique
        ([[-1.0, 1.0], [-1.0, -1.0]], False)
    """
    values = as_array(space, x)
    P = _points(space, K)
    distances = space.norms(values[None, :] - P)
    far = float(np.max(distances))
    indices = np.flatnonzero(distances >= far - tol)
    return FarthestReport(
        query=values.tolist(),
        far_distance=far,
        attaining=P[indices].tolist(),
        attaining_indices=indices.tolist(),
        unique=len(dedupe_rows(P[indices], tol)) == 1,
    )


def _normal_cone_directions(P: np.ndarray) -> np.ndarray:
    """For each Euclidean hull vertex, the mean outward normal of its facets."""
    if P.shape[1] not in (2, 3) or len(P) <= P.shape[1]:
        return np.zeros((0, P.shape[1]))
    try:
        hull = ConvexHull(P)
    except QhullError:
        return np.zeros((0, P.shape[1]))
    rows = []
    for v in hull.vertices:
        normals = hull.equations[np.any(hull.simplices == v, axis=1), :-1]
        u = normals.mean(axis=0)
        if np.linalg.norm(u) > 0.0:
            rows.append(u / np.linalg.norm(u))
    return np.array(rows) if rows else np.zeros((0, P.shape[1]))


def _far_set_queries(space: NormedSpace, P: np.ndarray, query_samples: int, rng) -> np.ndarray:
    centroid = P.mean(axis=0)
    scale = max(_diameter(space, P), 1.0)
    blocks = [centroid[None, :] + 3.0 * scale * ball_sample_array(space, query_samples, rng)]
    for k in P:
        away = centroid - k
        length = float(np.linalg.norm(away))
        if length > 0.0:
            blocks.append(np.array([centroid + r * scale * away / length for r in RAY_RADII]))
    for u in _normal_cone_directions(P):
        blocks.append(np.array([centroid - r * scale * u for r in RAY_RADII]))
    return np.vstack(blocks)


def far_set(
    space: NormedSpace,
    K: SetInput,
    query_samples: int = 1000,
    tol: float = UNIQUENESS_TOL,
    seed: Optional[int] = None,
) -> PointSet:
    """
    Far K, the union of F_K(q) over sampled queries q.

    Queries are uniform in the ball of radius 3 diam(K) around the centroid,
    on rays from the centroid pointing away from each k, and on rays against
    the outward normal cones of the Euclidean hull vertices (planar and
    spatial sets). The result keeps the order of K and records the indices.
    """
    if query_samples < 1:
        raise GeomInvalidParameterError("query_samples must be at least 1", error_code="PARAM")
    P = _points(space, K)
    rng = derive_rng(resolve_seed(seed), "farthest-points", "far_set")
    Q = _far_set_queries(space, P, query_samples, rng)
    hit = np.zeros(len(P), dtype=bool)
    for start in range(0, len(Q), QUERY_BATCH):
        D = _distance_table(space, Q[start:start + QUERY_BATCH], P)
        hit |= np.any(D >= D.max(axis=1, keepdims=True) - tol, axis=0)
    indices = np.flatnonzero(hit)
    label = K.label if isinstance(K, PointSet) else "K"
    logger.debug("far_set: %d queries, %d of %d points attained", len(Q), len(indices), len(P))
    return PointSet(points=P[indices], label=f"Far {label}", source_indices=indices.tolist())


def hull_vertices(K: SetInput) -> np.ndarray:
    """Indices of the Euclidean convex-hull vertices of K (planar and spatial sets)."""
    P = K.array if isinstance(K, PointSet) else np.atleast_2d(np.asarray(K, dtype=float))
    if P.size == 0:
        raise GeomEmptySetError("K must be nonempty", error_code="EMPTY")
    return hull_vertex_indices(P)


def density_experiment(
    space: NormedSpace, K: SetInput, cfg: Optional[ProbeConfig] = None, hlur: Optional[Verdict] = None
) -> DensityReport:
    """
    Share of uniform queries with a unique farthest point in K.

    Queries fill the axis box of side 4 diam(K) centred at the centroid of K.
    A warning is attached (and logged) when the space is not HLUR, in which
    case ties may occupy regions of positive volume.
    """
    cfg = cfg if cfg is not None else ProbeConfig()
    P = _points(space, K)
    unique_P = dedupe_rows(P, cfg.uniqueness_tol)
    side = 4.0 * _diameter(space, P)
    if hlur is None:
        hlur = check_hlur(space, cfg)
    warning = None
    if not hlur.holds:
        warning = f"space {space.label or space.kind.value} is not HLUR ({hlur.status.value})"
        logger.warning("density_experiment: %s", warning)

    rng = derive_rng(cfg.effective_seed, "farthest-points", "density_experiment")
    Q = P.mean(axis=0)[None, :] + side * (rng.random((cfg.samples, space.dim)) - 0.5)
    unique_count = 0
    for start in range(0, len(Q), QUERY_BATCH):
        D = _distance_table(space, Q[start:start + QUERY_BATCH], unique_P)
        ties = np.sum(D >= D.max(axis=1, keepdims=True) - cfg.uniqueness_tol, axis=1)
        unique_count += int(np.sum(ties == 1))
    return DensityReport(
        fraction=unique_count / cfg.samples,
        unique_count=unique_count,
        samples=cfg.samples,
        seed=cfg.effective_seed,
        box_side=side,
        warning=warning,
    )


def _unmatched(A: np.ndarray, B: np.ndarray, tol: float) -> np.ndarray:
    """Rows of A with no row of B within tol (max-abs)."""
    if len(B) == 0:
        return A
    gaps = np.max(np.abs(A[:, None, :] - B[None, :, :]), axis=2)
    return A[np.min(gaps, axis=1) > tol]


def hull_equality_check(space: NormedSpace, K: SetInput, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Compare the Euclidean hull vertices of K with Far K as point sets.

    Only Euclidean planes and spaces are supported, where every hull vertex
    is exposed by some query and no other point of K is ever farthest.
    Repeated points of K count once; vertices match within HULL_MATCH_TOL.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> l2 = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": 2}})
        >>> hull_equality_check(l2, [[1, 1], [1, -1], [-1, 1], [-1, -1], [0, 0]]).status.value
        'holds-numerical'
        >>> hull_equality_check(l2, [[0, 0], [1, 0], [2, 0]]).status.value
        'holds-numerical'
    """
    cfg = cfg if cfg is not None else ProbeConfig()
    if not space.is_euclidean or space.dim not in (2, 3):
        raise GeomUnsupportedSpaceError(
            "hull equality is checked on Euclidean spaces of dimension 2 or 3",
            error_code="UNSUPPORTED",
            problem_data={"kind": space.kind.value, "dim": space.dim},
        )
    P = _points(space, K)
    hull = dedupe_rows(P[hull_vertices(P)], HULL_MATCH_TOL)
    far = dedupe_rows(far_set(space, P, cfg.region_samples, cfg.uniqueness_tol, cfg.effective_seed).array,
                      HULL_MATCH_TOL)
    missing = _unmatched(hull, far, HULL_MATCH_TOL)
    extra = _unmatched(far, hull, HULL_MATCH_TOL)
    stats: Dict[str, Any] = {
        "samples": cfg.region_samples,
        "seed": cfg.effective_seed,
        "worst_margin": None,
        "points": len(P),
        "hull_vertices": len(hull),
    }
    if len(missing) == 0 and len(extra) == 0:
        return Verdict(property="hull-equality", status=VerdictStatusEnum.HOLDS_NUMERICAL, stats=stats)
    return Verdict(
        property="hull-equality",
        status=VerdictStatusEnum.FAILS,
        certificate={
            "hull_vertices": hull.tolist(),
            "far_points": far.tolist(),
            "missing_from_far": missing.tolist(),
            "not_hull_vertices": extra.tolist(),
        },
        stats=stats,
    )
