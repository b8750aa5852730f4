"""
Exposed faces, the duality map, slices, A_0(x), D[x, delta], C[x, delta] and Hausdorff distances.

Polyhedral balls are handled exactly: faces are vertex filters, slices and
D-regions are vertex enumerations of intersections with half-spaces. Other
bodies use their closed-form faces and sample regions along sphere curves
y(s) = (p + s w) / |p + s w| leaving a face point p, cut where the defining
inequality stops holding.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import brentq

from ..models.enums.representation_enum import RepresentationEnum
from ..models.enums.verdict_status_enum import VerdictStatusEnum
from ..models.reports.verdict import Verdict
from ..models.sets.point_collections import FaceSet, FunctionalSet, RegionSample, _PointCollection
from ..models.spaces.normed_space import NormedSpace
from ..models.vectors.vector import Functional, Vector
from ..utils.geom_errors import GeomEmptySetError, GeomInvalidParameterError, GeomNotOnSphereError
from ..utils.polytope_utils import dedupe_rows, enumerate_vertices, lexsort_rows, sort_rows
from ..utils.rng import derive_rng, resolve_seed
from ..utils.sphere_utils import first_crossing
from .norms import (
    PointLike,
    as_array,
    ball_sample_array,
    distances_to_set,
    sphere_sample_array,
    unit_rows,
)

logger = logging.getLogger(__name__)

DEFAULT_REGION_SAMPLES = 256
CURVE_S_GRID = np.concatenate([[0.0], np.logspace(-9, 7, 321)])
RAY_S_MAX = 1e8


def _check_dual_unit(space: NormedSpace, f: np.ndarray) -> float:
    dn = float(space.dual_norms(f)[0])
    if abs(dn - 1.0) > space.tol * 10:
        raise GeomNotOnSphereError(
            f"functional must lie on the dual sphere, |f|* = {dn!r}",
            error_code="SPHERE",
            problem_data={"functional": f.tolist(), "dual_norm": dn},
        )
    return dn


def _check_unit(space: NormedSpace, x: np.ndarray) -> float:
    n = float(space.norms(x)[0])
    if abs(n - 1.0) > space.tol * 10:
        raise GeomNotOnSphereError(
            f"point must lie on the unit sphere, |x| = {n!r}",
            error_code="SPHERE",
            problem_data={"point": x.tolist(), "norm": n},
        )
    return n


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not 0.0 <= delta <= 1.0:
        raise GeomInvalidParameterError(f"delta must lie in [0, 1], got {delta}", error_code="PARAM")
    return delta


# -- faces and duality -------------------------------------------------------------------


def face_vertex_array(space: NormedSpace, f: np.ndarray) -> np.ndarray:
    return space.family.face_vertices(f, space.tol)


def exposed_face(space: NormedSpace, f: PointLike) -> FaceSet:
    """
    The exposed face S(X, f, 0) = {x in B_X : f(x) = 1} of a dual-unit functional.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> exposed_face(linf, [0.5, 0.5]).points
        [[1.0, 1.0]]
    """
    values = as_array(space, f, "f")
    _check_dual_unit(space, values[None, :])
    V = face_vertex_array(space, values)
    if V.shape[0] == 0:
        raise GeomEmptySetError("exposed face came out empty", error_code="EMPTY", problem_data={"functional": values.tolist()})
    return FaceSet(points=V, exposing=Functional.of(values), representation=RepresentationEnum.POLYTOPE, exact=True)


def duality_map_array(space: NormedSpace, x: np.ndarray) -> np.ndarray:
    """Extreme points of J(x), lexicographically ascending."""
    return space.family.normal_cone_vertices(x, space.tol)


def duality_map(space: NormedSpace, x: PointLike) -> FunctionalSet:
    """
    J(x) = {f in S_X* : f(x) = 1}, described by its extreme points.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> duality_map(linf, [1.0, 1.0]).functionals
        [[0.0, 1.0], [1.0, 0.0]]
    """
    values = as_array(space, x)
    _check_unit(space, values[None, :])
    return FunctionalSet(functionals=duality_map_array(space, values), anchor=Vector.of(values))


def _face_pieces(space: NormedSpace, x: np.ndarray) -> Tuple[np.ndarray, List[np.ndarray]]:
    J = duality_map_array(space, x)
    pieces: List[np.ndarray] = []
    for g in J:
        V = face_vertex_array(space, g)
        if not any(P.shape == V.shape and np.max(np.abs(P - V)) <= space.tol for P in pieces):
            pieces.append(V)
    return J, pieces


def containing_faces(space: NormedSpace, x: PointLike) -> List[FaceSet]:
    """The exposed faces S(X, g, 0) for the extreme g in J(x); a single face when x lies in exactly one."""
    values = as_array(space, x)
    _check_unit(space, values[None, :])
    J = duality_map_array(space, values)
    faces: List[FaceSet] = []
    for g in J:
        V = face_vertex_array(space, g)
        if not any(len(F.points) == len(V) and np.max(np.abs(F.array - V)) <= space.tol for F in faces):
            faces.append(FaceSet(points=V, exposing=Functional.of(g), exact=True))
    return faces


def a0_set(space: NormedSpace, x: PointLike) -> FaceSet:
    """
    A_0(x) = {y in S_X : |x + y| = 2}, the union of the faces S(X, g, 0) over g in J(x).

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> l2 = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": 2}})
        >>> a0_set(l2, [0.0, 1.0]).points
        [[0.0, 1.0]]
    """
    values = as_array(space, x)
    _check_unit(space, values[None, :])
    J, pieces = _face_pieces(space, values)
    points = sort_rows(dedupe_rows(np.vstack(pieces), space.tol))
    exposing = Functional.of(J[0]) if len(J) == 1 else None
    return FaceSet(points=points, pieces=[P for P in pieces], exposing=exposing, exact=True)


# -- sphere curves ---------------------------------------------------------------------


def _tangent_directions(space: NormedSpace, p: np.ndarray, normal: np.ndarray, count: int, rng) -> np.ndarray:
    """Directions Euclidean-orthogonal to ``normal``: +-rot90 in the plane, seeded in higher dimensions."""
    if space.dim == 1:
        return np.zeros((0, 1))
    if space.dim == 2:
        t = np.array([-normal[1], normal[0]])
        t = t / np.linalg.norm(t)
        return np.vstack([t, -t])
    Z = rng.standard_normal((count, space.dim))
    nn = normal / np.linalg.norm(normal)
    Z = Z - np.outer(Z @ nn, nn)
    return Z / np.linalg.norm(Z, axis=1)[:, None]


def _curve_points(space: NormedSpace, p: np.ndarray, w: np.ndarray, s_end: float, k: int) -> np.ndarray:
    s = np.linspace(0.0, s_end, max(k, 2))
    return unit_rows(space, p[None, :] + s[:, None] * w[None, :])


def _max_spacing(space: NormedSpace, Y: np.ndarray) -> float:
    if Y.shape[0] < 2:
        return 0.0
    return float(np.max(space.norms(np.diff(Y, axis=0))))


def _ray_rim(space: NormedSpace, p: np.ndarray, w: np.ndarray, target: float) -> float:
    """Largest s >= 0 with |p + s w| <= target (the gauge along the ray is nondecreasing)."""
    if not np.isfinite(target):
        return RAY_S_MAX
    gauge = lambda s: float(space.norms(p + s * w)[0])
    if gauge(0.0) >= target:
        return 0.0
    s_hi = 1e-6
    while gauge(s_hi) < target and s_hi < RAY_S_MAX:
        s_hi *= 2.0
    if s_hi >= RAY_S_MAX:
        return RAY_S_MAX
    return brentq(lambda s: gauge(s) - target, 0.0, s_hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)


# -- slices ------------------------------------------------------------------------------


def slice_region(
    space: NormedSpace,
    f: PointLike,
    delta: float,
    count: int = DEFAULT_REGION_SAMPLES,
    seed: Optional[int] = None,
) -> RegionSample:
    """
    The slice S(X, f, delta) = {x in B_X : f(x) >= 1 - delta}.

    Polyhedral balls give the exact slice polytope. Otherwise the sample holds
    the face, the sphere curves from each face vertex up to the rim
    f = 1 - delta, and filtered sphere and ball samples; it is never empty.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> len(slice_region(linf, [0.5, 0.5], 0.1).points)
        3
    """
    values = as_array(space, f, "f")
    _check_dual_unit(space, values[None, :])
    delta = _check_delta(delta)
    defining = f"slice f={[float(v) for v in values]} delta={delta!r}"

    if space.is_polyhedral:
        A = np.vstack([space.facet_normals, -values[None, :]])
        b = np.concatenate([np.ones(space.facet_normals.shape[0]), [-(1.0 - delta)]])
        V = enumerate_vertices(A, b, space.tol)
        if V.shape[0] == 0:
            V = face_vertex_array(space, values)
        return RegionSample(points=V, pieces=[V], exact=True, mesh=0.0, defining=defining)

    rng = derive_rng(resolve_seed(seed), "face-geometry", "slice_region", tuple(values.tolist()), delta)
    F = face_vertex_array(space, values)
    if delta == 0.0:
        return RegionSample(points=F, pieces=[F], exact=True, defining=defining)

    target = np.inf if delta >= 1.0 else 1.0 / (1.0 - delta)
    n_dirs = 8 if space.dim > 2 else 2
    per_curve = max(2, count // max(1, len(F) * n_dirs))
    blocks = [F]
    mesh = 0.0
    for p in F:
        for w in _tangent_directions(space, p, values, n_dirs, rng):
            s_end = _ray_rim(space, p, w, target)
            Y = _curve_points(space, p, w, s_end, per_curve)
            mesh = max(mesh, _max_spacing(space, Y))
            blocks.append(Y)
    S = sphere_sample_array(space, count, rng)
    B = ball_sample_array(space, count, rng)
    extra = np.vstack([S, B])
    blocks.append(extra[extra @ values >= 1.0 - delta])
    points = np.vstack(blocks)
    points = points[points @ values >= 1.0 - delta - space.tol]
    return RegionSample(points=points, exact=False, mesh=max(mesh, space.tol), defining=defining)


# -- D[x, delta] and C[x, delta] -----------------------------------------------------------


def _polyhedral_d_pieces(space: NormedSpace, x: np.ndarray, delta: float) -> List[np.ndarray]:
    W = space.facet_normals
    pieces: List[np.ndarray] = []
    for w in W[lexsort_rows(W, descending=True)]:
        level = 2.0 - 2.0 * delta - float(w @ x)
        if level > 1.0 + space.tol:
            continue
        A = np.vstack([W, -w[None, :]])
        b = np.concatenate([np.ones(W.shape[0]), [-level]])
        V = enumerate_vertices(A, b, space.tol)
        if V.shape[0]:
            pieces.append(V)
    return pieces


def _d_region_curves(space: NormedSpace, x: np.ndarray, delta: float, count: int, rng) -> Tuple[np.ndarray, float]:
    """Sphere curves of C[x, delta] leaving the points of A_0(x), cut where |x + y| = 2 - 2 delta."""
    _, pieces = _face_pieces(space, x)
    anchors = dedupe_rows(np.vstack(pieces), space.tol)
    threshold = 2.0 - 2.0 * delta
    n_dirs = 8 if space.dim > 2 else 2
    per_curve = max(2, count // max(1, len(anchors) * n_dirs))
    blocks = [anchors]
    mesh = 0.0
    for p in anchors:
        for w in _tangent_directions(space, p, p, n_dirs, rng):
            phi = lambda s, p=p, w=w: float(space.norms(x + unit_rows(space, p + s * w)[0])[0])
            s_end = first_crossing(phi, threshold, CURVE_S_GRID)
            if s_end is None:
                s_end = float(CURVE_S_GRID[-1])
            Y = _curve_points(space, p, w, s_end, per_curve)
            mesh = max(mesh, _max_spacing(space, Y))
            blocks.append(Y)
    return np.vstack(blocks), mesh


def d_region(
    space: NormedSpace,
    x: PointLike,
    delta: float,
    count: int = DEFAULT_REGION_SAMPLES,
    seed: Optional[int] = None,
) -> RegionSample:
    """
    D[x, delta] = {y in B_X : |(x + y) / 2| >= 1 - delta}.

    Polyhedral balls give the exact union of the polytopes
    B_X ∩ {w(x + y) >= 2 - 2 delta} over the facet normals w. Otherwise the
    sample mixes the sphere curves through A_0(x) and points near A_0(x)
    (half of ``count``) with uniform ball samples, all filtered by the
    defining inequality.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> len(d_region(linf, [1.0, 1.0], 0.05).pieces)
        2
    """
    values = as_array(space, x)
    _check_unit(space, values[None, :])
    delta = _check_delta(delta)
    defining = f"D x={[float(v) for v in values]} delta={delta!r}"
    threshold = 2.0 - 2.0 * delta

    if space.is_polyhedral:
        pieces = _polyhedral_d_pieces(space, values, delta)
        points = sort_rows(dedupe_rows(np.vstack(pieces), space.tol))
        return RegionSample(points=points, pieces=pieces, exact=True, mesh=0.0, defining=defining)

    if delta == 0.0:
        _, pieces = _face_pieces(space, values)
        return RegionSample(
            points=sort_rows(dedupe_rows(np.vstack(pieces), space.tol)), pieces=pieces, exact=True, defining=defining
        )

    rng = derive_rng(resolve_seed(seed), "face-geometry", "d_region", tuple(values.tolist()), delta)
    curves, mesh = _d_region_curves(space, values, delta, count, rng)
    half = max(1, count // 2)
    anchors = curves[rng.integers(0, curves.shape[0], half)]
    eta = rng.random(half) * max(delta, space.tol) ** 0.5
    near = (1.0 - eta)[:, None] * anchors + eta[:, None] * ball_sample_array(space, half, rng)
    uniform = ball_sample_array(space, count - half, rng)
    points = np.vstack([curves, near, uniform])
    points = points[space.norms(values + points) >= threshold - space.tol]
    return RegionSample(points=points, exact=False, mesh=max(mesh, space.tol), defining=defining)


def c_region(
    space: NormedSpace,
    x: PointLike,
    delta: float,
    count: int = DEFAULT_REGION_SAMPLES,
    seed: Optional[int] = None,
) -> RegionSample:
    """C[x, delta] = D[x, delta] ∩ S_X, as sphere points of the D-region."""
    values = as_array(space, x)
    _check_unit(space, values[None, :])
    delta = _check_delta(delta)
    defining = f"C x={[float(v) for v in values]} delta={delta!r}"
    threshold = 2.0 - 2.0 * delta

    if space.is_polyhedral:
        blocks = []
        mesh = 0.0
        k = max(2, count // 16)
        for V in _polyhedral_d_pieces(space, values, delta):
            blocks.append(V)
            for i in range(V.shape[0]):
                for j in range(i + 1, V.shape[0]):
                    t = np.linspace(0.0, 1.0, k)[:, None]
                    seg = (1.0 - t) * V[i] + t * V[j]
                    if np.all(np.abs(space.norms(seg) - 1.0) <= space.tol):
                        blocks.append(seg)
                        mesh = max(mesh, _max_spacing(space, seg))
        points = dedupe_rows(np.vstack(blocks), space.tol)
    else:
        rng = derive_rng(resolve_seed(seed), "face-geometry", "c_region", tuple(values.tolist()), delta)
        points, mesh = _d_region_curves(space, values, delta, count, rng)
    on_sphere = np.abs(space.norms(points) - 1.0) <= 10 * space.tol
    points = points[on_sphere & (space.norms(values + points) >= threshold - space.tol)]
    return RegionSample(points=sort_rows(points), exact=False, mesh=max(mesh, space.tol), defining=defining)


# -- Hausdorff distances -----------------------------------------------------------------

SetLike = Union[FaceSet, RegionSample]


def directed_hausdorff(space: NormedSpace, A: SetLike, B: SetLike) -> float:
    """
    sup over a in A of d(a, B): zero exactly when A lies in B.

    The supremum over a polytope A is taken at the vertices of its pieces.
    That is exact when B is a single convex set. When B is a union of several
    convex pieces (a two-piece A_0(x), say) the distance to B is no longer
    convex along A and the value is a lower bound.
    """
    if A.is_empty or B.is_empty:
        raise GeomEmptySetError("Hausdorff distance of an empty set", error_code="EMPTY")
    return float(np.max(distances_to_set(space, A.array, B)))


def hausdorff(space: NormedSpace, A: SetLike, B: SetLike) -> float:
    """
    Hausdorff distance max(sup_A d(., B), sup_B d(., A)).

    Examples:
        >>> from banach_geom.models import NormedSpace, FaceSet
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> hausdorff(linf, FaceSet(points=[[1, -1], [1, 1]]), FaceSet(points=[[1, 1]]))
        2.0
    """
    return max(directed_hausdorff(space, A, B), directed_hausdorff(space, B, A))


def hausdorff_with_error(space: NormedSpace, A: SetLike, B: SetLike) -> Tuple[float, float]:
    """Hausdorff distance together with the mesh error of the sampled inputs."""
    return hausdorff(space, A, B), float(A.mesh + B.mesh)


def face_coincidence(space: NormedSpace, x: PointLike) -> Verdict:
    """
    Whether all exposed faces S(X, f, 0), f in J(x), coincide.

    Pairs of extreme functionals are compared in descending lexicographic
    order; the first pair at Hausdorff distance above tol is the certificate.
    """
    values = as_array(space, x)
    _check_unit(space, values[None, :])
    J = duality_map_array(space, values)
    J = J[lexsort_rows(J, descending=True)]
    faces = [FaceSet(points=face_vertex_array(space, g), exposing=Functional.of(g)) for g in J]
    worst = 0.0
    for i in range(len(J)):
        for j in range(i + 1, len(J)):
            distance = hausdorff(space, faces[i], faces[j])
            worst = max(worst, distance)
            if distance > space.tol:
                return Verdict(
                    property="face-coincidence",
                    status=VerdictStatusEnum.FAILS,
                    certificate={
                        "point": values.tolist(),
                        "f": J[i].tolist(),
                        "g": J[j].tolist(),
                        "distance": distance,
                        "face_f": faces[i].points,
                        "face_g": faces[j].points,
                    },
                    stats={"functionals": len(J), "worst_margin": distance - space.tol},
                )
    return Verdict(
        property="face-coincidence",
        status=VerdictStatusEnum.HOLDS_EXACT,
        stats={"functionals": len(J), "worst_margin": worst - space.tol},
        note="J(x) is a singleton" if len(J) == 1 else None,
    )
