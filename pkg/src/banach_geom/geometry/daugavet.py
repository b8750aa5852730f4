"""
Operator norms, the Daugavet equation |I + T| = 1 + |T|, approximate-eigenvalue
residuals and the anti-Daugavet probe.

Operator norms are exact where a closed form exists (l_1, l_2, l_inf, scalar
and rank-one operators, polytope balls via their vertices). Planar spheres
are otherwise searched on an angle grid refined by a bounded scalar search,
higher dimensions by seeded multistart; both give lower bounds, with real
eigenvectors of the operator added as candidate points.
"""

import logging
import math
from typing import Dict, Iterator, List, Optional, Tuple, Union

import numpy as np

from ..models.enums.norm_kind_enum import NormKindEnum
from ..models.enums.verdict_status_enum import VerdictStatusEnum
from ..models.reports.probe_config import ProbeConfig
from ..models.reports.spectrum_report import SpectrumReport
from ..models.reports.verdict import Verdict
from ..models.spaces.normed_space import NormedSpace
from ..models.vectors.vector import OperatorMatrix, Vector
from ..utils.geom_errors import GeomDimensionMismatchError, GeomNonFiniteInputError
from ..utils.polytope_utils import lexsort_rows
from ..utils.rng import derive_rng
from ..utils.sphere_utils import angle_directions, grid_extremum, multistart_extremum
from .faces import face_vertex_array
from .norms import PointLike, as_array, sphere_sample_array, unit_rows

logger = logging.getLogger(__name__)

MatrixLike = Union[OperatorMatrix, np.ndarray, List[List[float]]]

RANK_TOL = 1e-13
SCALAR_CANDIDATES = (0.5, 1.0, 2.0)
RANDOM_SHARE = 4
MAX_ATTEMPT_FACTOR = 20


def as_matrix(space: NormedSpace, T: MatrixLike) -> np.ndarray:
    A = T.array if isinstance(T, OperatorMatrix) else np.asarray(T, dtype=float)
    if A.shape != (space.dim, space.dim):
        raise GeomDimensionMismatchError(
            f"operator of shape {A.shape} does not act on a space of dimension {space.dim}",
            error_code="DIM",
            problem_data={"shape": list(A.shape), "dim": space.dim},
        )
    if not np.all(np.isfinite(A)):
        raise GeomNonFiniteInputError("operator has non-finite entries", error_code="NONFINITE")
    return A


def _real_eigenvectors(A: np.ndarray) -> np.ndarray:
    values, vectors = np.linalg.eig(A)
    keep = np.abs(values.imag) <= 1e-12 * (1.0 + np.abs(values.real))
    V = vectors[:, keep].real.T
    if V.shape[0] == 0:
        return np.zeros((0, A.shape[0]))
    return V / np.linalg.norm(V, axis=1)[:, None]


def _closed_form_norm(space: NormedSpace, A: np.ndarray) -> Optional[float]:
    n = space.dim
    if np.array_equal(A, A[0, 0] * np.eye(n)):
        return abs(float(A[0, 0]))
    family = space.family
    if space.kind == NormKindEnum.LP:
        if family.p == 1:
            return float(np.max(np.sum(np.abs(A), axis=0)))
        if math.isinf(family.p):
            return float(np.max(np.sum(np.abs(A), axis=1)))
        if family.p == 2:
            return float(np.linalg.norm(A, 2))
    U, s, Vt = np.linalg.svd(A)
    if s[0] == 0.0:
        return 0.0
    if n == 1 or s[1] <= RANK_TOL * s[0]:
        # rank one: |u v^T| = |u| |v|*
        return float(s[0] * space.norms(U[:, 0])[0] * space.dual_norms(Vt[0])[0])
    if space.is_polyhedral:
        return float(np.max(space.norms(space.ball_vertices @ A.T)))
    return None


def _operator_norm(
    space: NormedSpace,
    A: np.ndarray,
    cfg: ProbeConfig,
    hints: Optional[np.ndarray] = None,
) -> Tuple[float, bool]:
    """(|A|, exact) with exact False when the value is a search lower bound."""
    closed = _closed_form_norm(space, A)
    if closed is not None:
        return closed, True
    candidates = _real_eigenvectors(A)
    if hints is not None and len(hints):
        candidates = np.vstack([np.atleast_2d(hints), candidates])
    ratio = lambda X: space.norms(X @ A.T) / space.norms(X)
    if space.dim == 2:
        extra = np.arctan2(candidates[:, 1], candidates[:, 0]) if len(candidates) else None
        value, _ = grid_extremum(
            lambda th: ratio(angle_directions(th)), cfg.probe_grid_points, maximize=True, extra_thetas=extra
        )
        logger.debug("operator norm by angle grid: %.15g", value)
        return value, False
    rng = derive_rng(cfg.effective_seed, "daugavet-lab", "operator_norm", A.tobytes().hex())
    value, _ = multistart_extremum(ratio, space.dim, cfg.multistart, rng, maximize=True, hints=candidates)
    logger.debug("operator norm by multistart (lower bound): %.15g", value)
    return value, False


def operator_norm(space: NormedSpace, T: MatrixLike, cfg: Optional[ProbeConfig] = None) -> float:
    """
    |T| = sup |Tx| / |x|.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> operator_norm(linf, [[0, 1], [0, 0]])
        1.0
    """
    cfg = cfg or ProbeConfig()
    return _operator_norm(space, as_matrix(space, T), cfg)[0]


def _daugavet_residual(space: NormedSpace, A: np.ndarray, cfg: ProbeConfig, hints=None) -> Tuple[float, float, float]:
    norm_t, _ = _operator_norm(space, A, cfg, hints)
    norm_it, _ = _operator_norm(space, np.eye(space.dim) + A, cfg, hints)
    return 1.0 + norm_t - norm_it, norm_t, norm_it


def daugavet_residual(space: NormedSpace, T: MatrixLike, cfg: Optional[ProbeConfig] = None) -> float:
    """
    1 + |T| - |I + T|; the Daugavet equation holds when this is at most tol.

    Never below -tol by the triangle inequality.
    """
    cfg = cfg or ProbeConfig()
    return _daugavet_residual(space, as_matrix(space, T), cfg)[0]


def _eigen_residual(
    space: NormedSpace,
    A: np.ndarray,
    lam: float,
    cfg: ProbeConfig,
    grid_points: int,
    hints: Optional[np.ndarray] = None,
) -> Tuple[float, np.ndarray]:
    B = A - lam * np.eye(space.dim)
    if space.dim == 1:
        return abs(float(B[0, 0])), np.array([1.0 / float(space.norms(np.ones(1))[0])])
    if space.is_euclidean:
        _, s, Vt = np.linalg.svd(B)
        return float(s[-1]), Vt[-1] / np.linalg.norm(Vt[-1])
    candidates = _real_eigenvectors(A)
    if hints is not None and len(hints):
        candidates = np.vstack([np.atleast_2d(hints), candidates])
    ratio = lambda X: space.norms(X @ B.T) / space.norms(X)
    if space.dim == 2:
        extra = np.arctan2(candidates[:, 1], candidates[:, 0]) if len(candidates) else None
        value, theta = grid_extremum(lambda th: ratio(angle_directions(th)), grid_points, extra_thetas=extra)
        witness = unit_rows(space, angle_directions(theta))[0]
        return max(value, 0.0), witness
    rng = derive_rng(cfg.effective_seed, "daugavet-lab", "approx_eigen_residual", B.tobytes().hex())
    value, x = multistart_extremum(ratio, space.dim, cfg.multistart, rng, hints=candidates)
    return max(value, 0.0), unit_rows(space, x)[0]


def approx_eigen_residual(
    space: NormedSpace,
    T: MatrixLike,
    lam: float,
    cfg: Optional[ProbeConfig] = None,
) -> Tuple[float, Vector]:
    """
    inf over unit x of |Tx - lam x|, with the minimising unit witness.

    Planar spheres use a grid of cfg.grid_points angles refined locally; the
    value is an upper bound within (|T| + |lam|) times the grid mesh.
    """
    cfg = cfg or ProbeConfig()
    value, witness = _eigen_residual(space, as_matrix(space, T), float(lam), cfg, cfg.grid_points)
    return value, Vector.of(witness)


def rank_one_operator(y: PointLike, f: PointLike, s: float = 1.0) -> OperatorMatrix:
    """
    s (y ⊗ f), the matrix s y f^T acting by x -> s f(x) y.

    Examples:
        >>> rank_one_operator([1.0, 0.0], [0.0, 1.0]).entries
        [[0.0, 1.0], [0.0, 0.0]]
    """
    y_arr = y.array if hasattr(y, "array") else np.asarray(y, dtype=float)
    f_arr = f.array if hasattr(f, "array") else np.asarray(f, dtype=float)
    return OperatorMatrix.of(float(s) * np.outer(y_arr, f_arr))


def spectrum_report(space: NormedSpace, T: MatrixLike, cfg: Optional[ProbeConfig] = None) -> SpectrumReport:
    """Operator norm, Daugavet residual and eigen residual at lam = |T|, with an eigenvalue cross-check."""
    cfg = cfg or ProbeConfig()
    A = as_matrix(space, T)
    norm_t, exact = _operator_norm(space, A, cfg)
    norm_it, _ = _operator_norm(space, np.eye(space.dim) + A, cfg)
    residual, witness = _eigen_residual(space, A, norm_t, cfg, cfg.grid_points)
    eigenvalues = np.linalg.eigvals(A)
    real = eigenvalues[np.abs(eigenvalues.imag) <= 1e-12 * (1.0 + np.abs(eigenvalues.real))].real
    gap = float(np.min(np.abs(real - norm_t))) if real.size else None
    return SpectrumReport(
        op_norm=norm_t,
        op_norm_exact=exact,
        norm_identity_plus=norm_it,
        daugavet_residual=1.0 + norm_t - norm_it,
        eigen_residual_at_norm=residual,
        witness=witness.tolist(),
        lipschitz=2.0 * norm_t,
        grid_points=cfg.grid_points,
        spectral_gap=gap,
    )


# -- anti-Daugavet probe -----------------------------------------------------------------


def _shear_candidates(space: NormedSpace) -> Iterator[Tuple[str, np.ndarray, np.ndarray]]:
    """centroid(F_h) g^T for facet pairs (h, g) whose faces share a vertex, both in descending order."""
    if not space.is_polyhedral:
        return
    W = space.facet_normals
    W = W[lexsort_rows(W, descending=True)]
    faces = [face_vertex_array(space, w) for w in W]
    for i, h in enumerate(W):
        centre = faces[i].mean(axis=0)
        for j, g in enumerate(W):
            if i == j:
                continue
            shared = np.any(np.max(np.abs(faces[i][:, None, :] - faces[j][None, :, :]), axis=2) <= space.tol)
            if shared:
                yield "shear", np.outer(centre, g), centre[None, :]


def _norming_candidate(space: NormedSpace, rng) -> Tuple[str, np.ndarray, np.ndarray]:
    y = sphere_sample_array(space, 1, rng)[0]
    f = space.family.normal_cone_vertices(y, space.tol)[0]
    s = float(rng.uniform(0.0, 5.0)) or 5.0
    return "rank-one-norming", s * np.outer(y, f), y[None, :]


def _random_candidate(space: NormedSpace, rng, index: int) -> Tuple[str, np.ndarray, None]:
    M = rng.standard_normal((space.dim, space.dim))
    if index % 2:
        return "random-psd", M @ M.T / space.dim, None
    return "random", M, None


def _candidate_stream(space: NormedSpace, cfg: ProbeConfig, rng) -> Iterator[Tuple[str, np.ndarray, Optional[np.ndarray]]]:
    total = cfg.daugavet_candidates
    yield from _shear_candidates(space)
    for _ in range(total // 2):
        yield _norming_candidate(space, rng)
    for s in SCALAR_CANDIDATES:
        yield "scalar", s * np.eye(space.dim), None
    for index in range(max(1, total // RANDOM_SHARE)):
        yield _random_candidate(space, rng, index)
    while True:
        yield _norming_candidate(space, rng)


def anti_daugavet_probe(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Search for an operator satisfying the Daugavet equation whose norm is not an approximate eigenvalue.

    Candidates, in order: shears centroid(F_h) g^T along adjacent flat faces,
    rank-one norming operators s y f^T with f in J(y), scalar operators and
    random operators; only those with daugavet_residual <= cfg.daugavet_tol
    count. The first candidate whose eigen residual at lam = |T| reaches
    cfg.eigen_threshold is the certificate that the space is not anti-Daugavet.
    """
    cfg = cfg or ProbeConfig()
    rng = derive_rng(cfg.effective_seed, "daugavet-lab", "anti_daugavet_probe")
    kept = 0
    rejected = 0
    worst = 0.0
    kinds: Dict[str, int] = {}
    for attempt, (kind, A, hints) in enumerate(_candidate_stream(space, cfg, rng)):
        if kept >= cfg.daugavet_candidates or attempt >= MAX_ATTEMPT_FACTOR * cfg.daugavet_candidates:
            break
        residual, norm_t, _ = _daugavet_residual(space, A, cfg, hints)
        if residual > cfg.daugavet_tol:
            rejected += 1
            continue
        kept += 1
        kinds[kind] = kinds.get(kind, 0) + 1
        eigen, witness = _eigen_residual(space, A, norm_t, cfg, cfg.probe_grid_points, hints)
        worst = max(worst, eigen)
        if eigen >= cfg.eigen_threshold:
            logger.info("anti-Daugavet fails: %s candidate with eigen residual %.6g", kind, eigen)
            return Verdict(
                property="anti-daugavet",
                status=VerdictStatusEnum.FAILS,
                certificate={
                    "kind": kind,
                    "operator": A.tolist(),
                    "op_norm": norm_t,
                    "daugavet_residual": residual,
                    "eigen_residual": eigen,
                    "witness": witness.tolist(),
                },
                stats={"samples": kept, "rejected": rejected, "seed": cfg.effective_seed,
                       "worst_margin": eigen - cfg.eigen_threshold},
            )
    return Verdict(
        property="anti-daugavet",
        status=VerdictStatusEnum.HOLDS_NUMERICAL,
        stats={
            "samples": kept,
            "rejected": rejected,
            "seed": cfg.effective_seed,
            "kinds": kinds,
            "max_eigen_residual": worst,
            "worst_margin": cfg.eigen_threshold - worst,
        },
    )
