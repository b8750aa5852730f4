"""
Property checkers with certificates.

Polyhedral balls are decided exactly by enumerating vertices, facets and
their faces; the smooth families are decided by their closed-form
classification. A sampled fallback covers families without one and can only
report holds-numerical. Every failing verdict carries the concrete witness,
which verify_certificate re-checks against the defining inequality.
"""

import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..models.enums.generator_kind_enum import GeneratorKindEnum
from ..models.enums.property_name_enum import PropertyNameEnum
from ..models.enums.verdict_status_enum import VerdictStatusEnum
from ..models.reports.probe_config import ProbeConfig
from ..models.reports.probe_report import FunctionalTrace, ProbeReport
from ..models.reports.verdict import Verdict
from ..models.sets.point_collections import FaceSet, RegionSample
from ..models.spaces.normed_space import NormedSpace
from ..utils.geom_errors import (
    GeomInvalidParameterError,
    GeomUnknownGeneratorError,
    GeomUnknownPropertyError,
)
from ..utils.polytope_utils import lexsort_rows
from ..utils.rng import derive_rng
from .daugavet import _daugavet_residual, _eigen_residual, as_matrix
from .faces import (
    _check_unit,
    _ray_rim,
    _tangent_directions,
    a0_set,
    c_region,
    d_region,
    duality_map_array,
    exposed_face,
    face_coincidence,
    face_vertex_array,
    hausdorff,
    slice_region,
)
from .norms import (
    PointLike,
    as_array,
    distances_to_set,
    dual_sphere_sample_array,
    sphere_sample_array,
    unit_rows,
)

logger = logging.getLogger(__name__)

DECAY_EXPONENT_MIN = 0.25
TEND_RATIO = 1e-2
FALLBACK_SAMPLE_CAP = 2000


def _config(cfg: Optional[ProbeConfig]) -> ProbeConfig:
    return cfg if cfg is not None else ProbeConfig()


def _stats(cfg: ProbeConfig, samples: int, worst_margin: Optional[float], **extra) -> Dict[str, Any]:
    return {"samples": samples, "seed": cfg.effective_seed, "worst_margin": worst_margin, **extra}


def _farthest_pair(space: NormedSpace, P: np.ndarray, dual: bool = False) -> Tuple[np.ndarray, np.ndarray, float]:
    measure = space.dual_norms if dual else space.norms
    best = (P[0], P[0], 0.0)
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            d = float(measure(P[i] - P[j])[0])
            if d > best[2]:
                best = (P[i], P[j], d)
    return best


# -- rotundity and smoothness ------------------------------------------------------------


def _rotund_certificate(space: NormedSpace, f: np.ndarray) -> Dict[str, Any]:
    F = face_vertex_array(space, f)
    p, q, diameter = _farthest_pair(space, F)
    return {"functional": f.tolist(), "points": [p.tolist(), q.tolist()], "diameter": diameter, "face": F.tolist()}


def _smooth_certificate(space: NormedSpace, x: np.ndarray) -> Dict[str, Any]:
    J = duality_map_array(space, x)
    f, g, diameter = _farthest_pair(space, J, dual=True)
    return {"point": x.tolist(), "functionals": [f.tolist(), g.tolist()], "diameter": diameter}


def _sampled_rotund(space: NormedSpace, cfg: ProbeConfig) -> Verdict:
    rng = derive_rng(cfg.effective_seed, "property-lab", "check_rotund")
    count = min(cfg.samples, FALLBACK_SAMPLE_CAP)
    worst = 0.0
    for f in dual_sphere_sample_array(space, count, rng):
        F = face_vertex_array(space, f)
        diameter = _farthest_pair(space, F)[2] if len(F) > 1 else 0.0
        worst = max(worst, diameter)
        if diameter > space.tol:
            return Verdict(property="rotund", status=VerdictStatusEnum.FAILS, certificate=_rotund_certificate(space, f),
                           stats=_stats(cfg, count, diameter - space.tol))
    logger.warning("rotundity decided by sampling %d functionals", count)
    return Verdict(property="rotund", status=VerdictStatusEnum.HOLDS_NUMERICAL,
                   stats=_stats(cfg, count, space.tol - worst))


def _sampled_smooth(space: NormedSpace, cfg: ProbeConfig) -> Verdict:
    rng = derive_rng(cfg.effective_seed, "property-lab", "check_smooth")
    count = min(cfg.samples, FALLBACK_SAMPLE_CAP)
    worst = 0.0
    for x in sphere_sample_array(space, count, rng):
        J = duality_map_array(space, x)
        diameter = _farthest_pair(space, J, dual=True)[2] if len(J) > 1 else 0.0
        worst = max(worst, diameter)
        if diameter > space.tol:
            return Verdict(property="smooth", status=VerdictStatusEnum.FAILS, certificate=_smooth_certificate(space, x),
                           stats=_stats(cfg, count, diameter - space.tol))
    logger.warning("smoothness decided by sampling %d points", count)
    return Verdict(property="smooth", status=VerdictStatusEnum.HOLDS_NUMERICAL,
                   stats=_stats(cfg, count, space.tol - worst))


def check_rotund(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Rotundity: every exposed face of the ball has at most one point.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> verdict = check_rotund(linf)
        >>> verdict.status.value, verdict.certificate["functional"], verdict.certificate["diameter"]
        ('fails', [1.0, 0.0], 2.0)
    """
    cfg = _config(cfg)
    family, dim = space.family, space.dim
    known = family.is_rotund(dim)
    if known is None:
        return _sampled_rotund(space, cfg)
    if known:
        note = "every facet is a single vertex" if space.is_polyhedral else "closed-form classification"
        return Verdict(property="rotund", status=VerdictStatusEnum.HOLDS_EXACT, stats=_stats(cfg, 0, space.tol), note=note)
    witness = family.rotundity_witness(dim)
    certificate = _rotund_certificate(space, np.asarray(witness, dtype=float))
    return Verdict(property="rotund", status=VerdictStatusEnum.FAILS, certificate=certificate,
                   stats=_stats(cfg, 0, certificate["diameter"] - space.tol))


def check_smooth(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Smoothness: every point of the sphere has a single norming functional.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> check_smooth(linf).certificate["point"]
        [1.0, 1.0]
    """
    cfg = _config(cfg)
    family, dim = space.family, space.dim
    known = family.is_smooth(dim)
    if known is None:
        return _sampled_smooth(space, cfg)
    if known:
        return Verdict(property="smooth", status=VerdictStatusEnum.HOLDS_EXACT, stats=_stats(cfg, 0, space.tol),
                       note="closed-form classification")
    witness = np.asarray(family.smoothness_witness(dim), dtype=float)
    certificate = _smooth_certificate(space, witness)
    return Verdict(property="smooth", status=VerdictStatusEnum.FAILS, certificate=certificate,
                   stats=_stats(cfg, 0, certificate["diameter"] - space.tol))


# -- ACS and HLUR ------------------------------------------------------------------------


def _acs_search(space: NormedSpace, points: np.ndarray) -> Tuple[Optional[Dict[str, Any]], float, int]:
    """
    Look for x, y on the sphere with |x + y| = 2 and f in J(x) with f(y) < 1.

    For each x the extreme g of J(x) run ascending; y runs over the centroid
    of S(X, g, 0) and then its vertices; f runs over the centroid of J(x) and
    then its extreme points. Returns (certificate or None, smallest margin, pairs tried).
    """
    worst = math.inf
    tried = 0
    for x in points:
        J = duality_map_array(space, x)
        f_candidates = np.vstack([J.mean(axis=0)[None, :], J]) if len(J) > 1 else J
        for g in J:
            F = face_vertex_array(space, g)
            y_candidates = np.vstack([F.mean(axis=0)[None, :], F]) if len(F) > 1 else F
            for y in y_candidates:
                for f in f_candidates:
                    tried += 1
                    margin = float(f @ y) - (1.0 - space.tol)
                    worst = min(worst, margin)
                    if margin < 0.0:
                        return {
                            "x": x.tolist(),
                            "y": y.tolist(),
                            "f": f.tolist(),
                            "f_of_y": float(f @ y),
                            "norm_sum": float(space.norms(x + y)[0]),
                        }, margin, tried
    return None, worst, tried


def _sampled_acs(space: NormedSpace, cfg: ProbeConfig) -> Verdict:
    rng = derive_rng(cfg.effective_seed, "property-lab", "check_acs")
    count = min(cfg.samples, FALLBACK_SAMPLE_CAP)
    blocks = [sphere_sample_array(space, count, rng)]
    smooth_witness = space.family.smoothness_witness(space.dim)
    if smooth_witness is not None:
        blocks.insert(0, np.asarray(smooth_witness, dtype=float)[None, :])
    rotund_witness = space.family.rotundity_witness(space.dim)
    if rotund_witness is not None:
        blocks.insert(0, face_vertex_array(space, np.asarray(rotund_witness, dtype=float)))
    certificate, worst, tried = _acs_search(space, np.vstack(blocks))
    if certificate is not None:
        return Verdict(property="acs", status=VerdictStatusEnum.FAILS, certificate=certificate,
                       stats=_stats(cfg, tried, worst))
    logger.warning("ACS decided by sampling %d tangent pairs", tried)
    return Verdict(property="acs", status=VerdictStatusEnum.HOLDS_NUMERICAL, stats=_stats(cfg, tried, worst))


def check_acs(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Alternative convexity or smoothness: |x + y| = 2 and f in J(x) force f(y) = 1.

    Polyhedral balls are searched exhaustively over the ball vertices in
    descending order (a failure at any point of a face shows up at its
    vertices); rotund or smooth families hold by derivation.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> c = check_acs(linf).certificate
        >>> c["x"], c["y"], c["f"], c["f_of_y"]
        ([1.0, 1.0], [0.0, 1.0], [0.5, 0.5], 0.5)
    """
    cfg = _config(cfg)
    if space.is_polyhedral:
        V = space.ball_vertices
        certificate, worst, tried = _acs_search(space, V[lexsort_rows(V, descending=True)])
        if certificate is not None:
            return Verdict(property="acs", status=VerdictStatusEnum.FAILS, certificate=certificate,
                           stats=_stats(cfg, tried, worst))
        return Verdict(property="acs", status=VerdictStatusEnum.HOLDS_EXACT, stats=_stats(cfg, tried, worst),
                       note="exhaustive over ball vertices")
    if space.family.is_rotund(space.dim):
        return Verdict(property="acs", status=VerdictStatusEnum.HOLDS_EXACT, stats=_stats(cfg, 0, space.tol),
                       note="rotund implies ACS")
    if space.family.is_smooth(space.dim):
        return Verdict(property="acs", status=VerdictStatusEnum.HOLDS_EXACT, stats=_stats(cfg, 0, space.tol),
                       note="smooth implies ACS")
    return _sampled_acs(space, cfg)


def _exact_or_numerical(*verdicts: Verdict) -> VerdictStatusEnum:
    if all(v.status == VerdictStatusEnum.HOLDS_EXACT for v in verdicts):
        return VerdictStatusEnum.HOLDS_EXACT
    return VerdictStatusEnum.HOLDS_NUMERICAL


def check_hlur(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    HLUR through the ACS route, cross-checked in dimension <= 2 against "rotund or smooth".

    A failure certificate is the constant sequence x_n = y: |x_n + x| = 2 while
    d(x_n, S(X, f, 0)) keeps the reported positive distance.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> check_hlur(linf).certificate["distance"]
        1.0
    """
    cfg = _config(cfg)
    acs = check_acs(space, cfg)
    stats: Dict[str, Any] = {**acs.stats, "acs": acs.status.value}
    if space.dim <= 2:
        rotund = check_rotund(space, cfg)
        smooth = check_smooth(space, cfg)
        other_holds = rotund.holds or smooth.holds
        stats.update({"rotund": rotund.status.value, "smooth": smooth.status.value})
        if other_holds != acs.holds:
            logger.error("HLUR routes disagree on %s: acs=%s rotund=%s smooth=%s",
                         space.label, acs.status.value, rotund.status.value, smooth.status.value)
            return Verdict(
                property="hlur",
                status=VerdictStatusEnum.INCONCLUSIVE,
                certificate={"acs": acs.to_json_dict(), "rotund": rotund.to_json_dict(), "smooth": smooth.to_json_dict()},
                stats=stats,
                note="ACS route and rotund-or-smooth route disagree",
            )
        if acs.holds:
            supporting = rotund if rotund.holds else smooth
            return Verdict(property="hlur", status=_exact_or_numerical(acs, supporting), stats=stats,
                           note="ACS route; rotund-or-smooth route agrees")
    elif acs.holds:
        return Verdict(property="hlur", status=acs.status, stats=stats, note="ACS route")

    certificate = dict(acs.certificate)
    f = np.asarray(certificate["f"], dtype=float)
    f = f / float(space.dual_norms(f)[0])
    face = exposed_face(space, f)
    certificate["distance"] = float(distances_to_set(space, np.asarray(certificate["y"])[None, :], face)[0])
    certificate["face"] = face.points
    certificate["sequence"] = "constant x_n = y"
    return Verdict(property="hlur", status=VerdictStatusEnum.FAILS, certificate=certificate, stats=stats)


# -- slice shrinkage and set convergence ---------------------------------------------------


def _decay_exponent(deltas: Sequence[float], values: Sequence[float], floor: float) -> float:
    pairs = [(d, v) for d, v in zip(deltas, values) if d > 0.0 and v > floor]
    tail = pairs[len(pairs) // 2:]
    if len(tail) < 2:
        return math.inf
    slope, _ = np.polyfit(np.log([d for d, _ in tail]), np.log([v for _, v in tail]), 1)
    return float(slope)


def _converges(deltas: Sequence[float], values: Sequence[float], tol: float) -> Tuple[bool, bool, float]:
    """(nonincreasing, tends to zero, decay exponent) of a distance sequence along a delta schedule."""
    slack = 10 * tol
    monotone = all(b <= a + slack + 1e-12 * abs(a) for a, b in zip(values, values[1:]))
    exponent = _decay_exponent(deltas, values, 10 * tol)
    tends = values[-1] <= 10 * tol or exponent >= DECAY_EXPONENT_MIN
    return monotone, tends, exponent


def _rate_constant(deltas: Sequence[float], values: Sequence[float]) -> float:
    rates = [v / math.sqrt(d) for d, v in zip(deltas, values) if d > 0.0]
    return max(rates) if rates else 0.0


def _hs_functionals(space: NormedSpace, cfg: ProbeConfig) -> np.ndarray:
    rng = derive_rng(cfg.effective_seed, "property-lab", "check_hs_slices")
    blocks = []
    if space.is_polyhedral:
        W = space.facet_normals
        blocks.append(W[lexsort_rows(W, descending=True)][: cfg.hs_functionals])
    have = sum(len(b) for b in blocks)
    if have < cfg.hs_functionals:
        blocks.append(dual_sphere_sample_array(space, cfg.hs_functionals - have, rng))
    return np.vstack(blocks)


def slice_distances(space: NormedSpace, f: np.ndarray, cfg: ProbeConfig) -> List[float]:
    """H(S(X, f, delta), S(X, f, 0)) along cfg.delta_schedule."""
    face = exposed_face(space, f)
    return [
        hausdorff(space, slice_region(space, f, delta, cfg.region_samples, cfg.effective_seed), face)
        for delta in cfg.delta_schedule
    ]


def check_hs_slices(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Slice shrinkage: H(S(X, f, delta), S(X, f, 0)) decreases to 0 as delta decreases.

    Checked for facet normals (polyhedral balls) and sampled dual-unit
    functionals. A distance sequence passes when it is nonincreasing and
    either ends below 10 tol or decays at least like delta^0.25 over the tail
    of the schedule. The worst rate constant max H / sqrt(delta) is reported.
    """
    cfg = _config(cfg)
    functionals = _hs_functionals(space, cfg)
    worst_rate, worst_exponent, worst_final = 0.0, math.inf, 0.0
    for f in functionals:
        values = slice_distances(space, f, cfg)
        monotone, tends, exponent = _converges(cfg.delta_schedule, values, cfg.tol)
        worst_rate = max(worst_rate, _rate_constant(cfg.delta_schedule, values))
        worst_exponent = min(worst_exponent, exponent)
        worst_final = max(worst_final, values[-1])
        if not (monotone and tends):
            return Verdict(
                property="hs",
                status=VerdictStatusEnum.FAILS,
                certificate={
                    "functional": f.tolist(),
                    "deltas": list(cfg.delta_schedule),
                    "distances": values,
                    "reason": "not nonincreasing" if not monotone else "does not tend to 0",
                },
                stats=_stats(cfg, len(functionals), -worst_final),
            )
    return Verdict(
        property="hs",
        status=VerdictStatusEnum.HOLDS_NUMERICAL,
        stats=_stats(
            cfg,
            len(functionals),
            worst_exponent - DECAY_EXPONENT_MIN if math.isfinite(worst_exponent) else 10 * cfg.tol - worst_final,
            rate_constant=worst_rate,
            worst_final=worst_final,
        ),
    )


def _region_convergence(
    space: NormedSpace,
    x: PointLike,
    cfg: Optional[ProbeConfig],
    region: Callable[..., RegionSample],
    name: str,
    hlur: Optional[Verdict],
) -> Verdict:
    cfg = _config(cfg)
    values_x = as_array(space, x)
    _check_unit(space, values_x[None, :])
    target = a0_set(space, values_x)
    distances = [
        hausdorff(space, region(space, values_x, delta, cfg.region_samples, cfg.effective_seed), target)
        for delta in cfg.delta_schedule
    ]
    monotone, tends, exponent = _converges(cfg.delta_schedule, distances, cfg.tol)
    coincidence = face_coincidence(space, values_x)
    if hlur is None:
        hlur = check_hlur(space, cfg)
    stats = _stats(
        cfg,
        len(distances),
        -distances[-1],
        deltas=list(cfg.delta_schedule),
        distances=distances,
        rate_constant=_rate_constant(cfg.delta_schedule, distances),
        decay_exponent=exponent if math.isfinite(exponent) else None,
        converges=monotone and tends,
        face_coincidence=coincidence.status.value,
        hlur=hlur.status.value,
    )
    converges = monotone and tends
    if converges and coincidence.holds:
        return Verdict(property=name, status=VerdictStatusEnum.HOLDS_NUMERICAL, stats=stats)
    if hlur.holds:
        logger.error("%s failed at %s although the space is HLUR", name, values_x.tolist())
        return Verdict(property=name, status=VerdictStatusEnum.INCONCLUSIVE, stats=stats,
                       note="HLUR holds but the set convergence failed")
    if not coincidence.holds:
        certificate = {"face_coincidence": coincidence.certificate}
    else:
        certificate = {"point": values_x.tolist(), "deltas": list(cfg.delta_schedule), "distances": distances}
    return Verdict(property=name, status=VerdictStatusEnum.FAILS, certificate=certificate, stats=stats)


def dset_convergence(
    space: NormedSpace, x: PointLike, cfg: Optional[ProbeConfig] = None, hlur: Optional[Verdict] = None
) -> Verdict:
    """
    D[x, delta] -> A_0(x) in the Hausdorff sense together with face coincidence at x.

    Both must hold when the space is HLUR; a failure there is reported as
    inconclusive. In a non-HLUR space a failure carries the face-coincidence
    certificate (or the distance table).
    """
    return _region_convergence(space, x, cfg, d_region, "dset-convergence", hlur)


def cset_convergence(
    space: NormedSpace, x: PointLike, cfg: Optional[ProbeConfig] = None, hlur: Optional[Verdict] = None
) -> Verdict:
    """C[x, delta] -> A_0(x) in the Hausdorff sense together with face coincidence at x."""
    return _region_convergence(space, x, cfg, c_region, "cset-convergence", hlur)


def check_lur(space: NormedSpace, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Local uniform rotundity, which in finite dimensions is rotundity.

    A failure is certified by the constant sequence x_n = q next to x = p for
    two points p, q of a nontrivial face: |x_n + x| = 2 but x_n does not tend to x.
    """
    cfg = _config(cfg)
    rotund = check_rotund(space, cfg)
    if rotund.holds:
        return Verdict(property="lur", status=rotund.status, stats=rotund.stats,
                       note="in finite dimensions LUR is equivalent to rotundity")
    p, q = (np.asarray(v, dtype=float) for v in rotund.certificate["points"])
    certificate = {
        "x": p.tolist(),
        "x_n": q.tolist(),
        "functional": rotund.certificate["functional"],
        "norm_sum": float(space.norms(p + q)[0]),
        "distance": float(space.norms(p - q)[0]),
        "sequence": "constant x_n",
    }
    return Verdict(property="lur", status=VerdictStatusEnum.FAILS, certificate=certificate, stats=rotund.stats)


def finite_dimensional_note(prop: Any, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """CLUR, NSC, KK, WNSC and weakly-CLUR hold in every finite-dimensional space."""
    try:
        name = prop if isinstance(prop, PropertyNameEnum) else PropertyNameEnum(prop)
    except ValueError as e:
        raise GeomUnknownPropertyError(f"Unknown property: {prop}", error_code="PROPERTY") from e
    if not name.automatic_in_finite_dimensions:
        raise GeomUnknownPropertyError(f"{name.value} is not automatic in finite dimensions", error_code="PROPERTY")
    return Verdict(property=name.value, status=VerdictStatusEnum.HOLDS_EXACT, stats=_stats(_config(cfg), 0, None),
                   note="automatic in finite dimensions")


# -- certificate verification --------------------------------------------------------------


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(b))


def _verify(space: NormedSpace, prop: str, c: Dict[str, Any], cfg: ProbeConfig) -> Tuple[bool, str]:
    tol = 10 * cfg.tol
    norm = lambda v: float(space.norms(np.asarray(v, dtype=float))[0])
    dual = lambda v: float(space.dual_norms(np.asarray(v, dtype=float))[0])
    pair = lambda f, x: float(np.asarray(f, dtype=float) @ np.asarray(x, dtype=float))

    if prop == "rotund":
        f, (p, q) = c["functional"], c["points"]
        ok = _close(dual(f), 1.0, tol) and all(_close(pair(f, v), 1.0, tol) and norm(v) <= 1.0 + tol for v in (p, q))
        return ok and norm(np.subtract(p, q)) > cfg.tol, "face of f contains two distinct points"
    if prop == "smooth":
        x, (f, g) = c["point"], c["functionals"]
        ok = _close(norm(x), 1.0, tol) and all(_close(dual(h), 1.0, tol) and _close(pair(h, x), 1.0, tol) for h in (f, g))
        return ok and dual(np.subtract(f, g)) > cfg.tol, "two distinct norming functionals at x"
    if prop in ("acs", "hlur"):
        x, y, f = c["x"], c["y"], c["f"]
        ok = (_close(norm(x), 1.0, tol) and _close(norm(y), 1.0, tol) and _close(norm(np.add(x, y)), 2.0, tol)
              and _close(dual(f), 1.0, tol) and _close(pair(f, x), 1.0, tol) and pair(f, y) < 1.0 - cfg.tol)
        if ok and prop == "hlur":
            face = exposed_face(space, np.asarray(f, dtype=float) / dual(f))
            ok = float(distances_to_set(space, np.asarray(y, dtype=float)[None, :], face)[0]) > cfg.tol
        return ok, "tangent pair with f(y) < 1"
    if prop == "lur":
        x, xn = c["x"], c["x_n"]
        ok = _close(norm(x), 1.0, tol) and _close(norm(xn), 1.0, tol) and _close(norm(np.add(x, xn)), 2.0, tol)
        return ok and norm(np.subtract(x, xn)) > cfg.tol, "constant sequence with |x_n + x| = 2 away from x"
    if prop == "anti-daugavet":
        A = as_matrix(space, c["operator"])
        residual, norm_t, _ = _daugavet_residual(space, A, cfg)
        eigen, _ = _eigen_residual(space, A, norm_t, cfg, cfg.probe_grid_points)
        return residual <= cfg.daugavet_tol and eigen >= cfg.eigen_threshold, "Daugavet operator with |T| off the spectrum"
    if prop == "face-coincidence":
        x, f, g = (np.asarray(c[k], dtype=float) for k in ("point", "f", "g"))
        ok = all(_close(dual(h), 1.0, tol) and _close(pair(h, x), 1.0, tol) for h in (f, g))
        return ok and hausdorff(space, exposed_face(space, f), exposed_face(space, g)) > cfg.tol, "two distinct faces through x"
    if prop == "hs":
        f = np.asarray(c["functional"], dtype=float)
        values = slice_distances(space, f, cfg)
        monotone, tends, _ = _converges(cfg.delta_schedule, values, cfg.tol)
        return not (monotone and tends), "slices do not shrink to the face"
    if prop in ("dset-convergence", "cset-convergence"):
        region = d_region if prop == "dset-convergence" else c_region
        x = np.asarray(c["point"], dtype=float)
        deltas = [float(d) for d in c["deltas"]]
        target = a0_set(space, x)
        values = [hausdorff(space, region(space, x, d, cfg.region_samples, cfg.effective_seed), target) for d in deltas]
        monotone, tends, _ = _converges(deltas, values, cfg.tol)
        return not (monotone and tends), "regions do not shrink to A_0(x)"
    raise GeomUnknownPropertyError(f"No certificate format for property: {prop}", error_code="PROPERTY")


def verify_certificate(
    space: NormedSpace, prop: Any, certificate: Dict[str, Any], cfg: Optional[ProbeConfig] = None
) -> Verdict:
    """
    Re-check a failing certificate against the defining inequality.

    Returns a failing verdict carrying the certificate when it re-verifies and
    an inconclusive verdict when it does not.
    """
    cfg = _config(cfg)
    name = prop.value if isinstance(prop, PropertyNameEnum) else str(prop).lower()
    if not certificate:
        raise GeomInvalidParameterError("empty certificate", error_code="PARAM")
    if name == "dset-convergence" or name == "cset-convergence":
        if "face_coincidence" in certificate:
            name, certificate = "face-coincidence", certificate["face_coincidence"]
    try:
        ok, meaning = _verify(space, name, certificate, cfg)
    except (KeyError, TypeError, ValueError) as e:
        return Verdict(property=name, status=VerdictStatusEnum.INCONCLUSIVE, stats=_stats(cfg, 0, None),
                       note=f"malformed certificate: {e}")
    if ok:
        return Verdict(property=name, status=VerdictStatusEnum.FAILS, certificate=certificate,
                       stats=_stats(cfg, 0, None), note=f"certificate re-verified: {meaning}")
    return Verdict(property=name, status=VerdictStatusEnum.INCONCLUSIVE, stats=_stats(cfg, 0, None),
                   note="certificate does not re-verify")


# -- sequence probe --------------------------------------------------------------------------


def _tends_to_zero(values: Sequence[float], tol: float) -> bool:
    return values[-1] <= 10 * tol or (values[0] > 0.0 and values[-1] <= TEND_RATIO * values[0])


def _face_walk(space: NormedSpace, x: np.ndarray, steps: np.ndarray, rng) -> np.ndarray:
    A0 = a0_set(space, x).array
    gaps = space.norms(A0 - x)
    far = A0[int(np.argmax(gaps))]
    if float(np.max(gaps)) <= space.tol:
        w = _tangent_directions(space, x, x, 1, rng)[0]
        return unit_rows(space, x[None, :] + steps[:, None] * w[None, :])
    w = (far - x) / np.linalg.norm(far - x)
    return unit_rows(space, far[None, :] + steps[:, None] * w[None, :])


def _random_tangent(space: NormedSpace, x: np.ndarray, steps: np.ndarray, rng) -> np.ndarray:
    w = rng.standard_normal(space.dim)
    w = w - (w @ x) / (x @ x) * x
    if not np.any(w):
        w = _tangent_directions(space, x, x, 1, rng)[0]
    w = w / np.linalg.norm(w)
    return unit_rows(space, x[None, :] + steps[:, None] * w[None, :])


def _cap_shrink(space: NormedSpace, x: np.ndarray, steps: np.ndarray, rng) -> np.ndarray:
    f = duality_map_array(space, x)[0]
    w = _tangent_directions(space, x, f, 1, rng)[0]
    rows = [unit_rows(space, x + _ray_rim(space, x, w, 1.0 / (1.0 - d)) * w)[0] for d in steps]
    return np.array(rows)


def sequence_probe(
    space: NormedSpace,
    x: PointLike,
    generator: Any,
    cfg: Optional[ProbeConfig] = None,
    anchor: Optional[PointLike] = None,
    functionals: Optional[Sequence[PointLike]] = None,
) -> ProbeReport:
    """
    Build a sphere sequence x_n with |x_n + x| -> 2 and record how it behaves.

    Generators: face-walk (approach the far end of A_0(x) from outside the
    face), random-tangent (x + t_n w pulled back to the sphere), cap-shrink
    (rim points of the slices S(X, f, 2^-n) for f in J(x)) and constant
    (x_n = anchor). Traces cover the extreme points of J(x) plus their
    centroid, or the given functionals.

    Examples:
        >>> from banach_geom.models import NormedSpace
        >>> linf = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> report = sequence_probe(linf, [1.0, 1.0], "constant", anchor=[0.0, 1.0], functionals=[[0.5, 0.5]])
        >>> report.traces[0].face_distances[:2]
        [1.0, 1.0]
    """
    cfg = _config(cfg)
    values_x = as_array(space, x)
    _check_unit(space, values_x[None, :])
    try:
        kind = generator if isinstance(generator, GeneratorKindEnum) else GeneratorKindEnum(generator)
    except ValueError as e:
        raise GeomUnknownGeneratorError(f"Unknown sequence generator: {generator}", error_code="GENERATOR") from e
    rng = derive_rng(cfg.effective_seed, "property-lab", "sequence_probe", kind.value, tuple(values_x.tolist()))
    steps = 2.0 ** -np.arange(1, cfg.sequence_length + 1, dtype=float)

    if kind == GeneratorKindEnum.CONSTANT:
        if anchor is None:
            raise GeomInvalidParameterError("the constant generator needs an anchor point", error_code="PARAM")
        point = as_array(space, anchor, "anchor")
        _check_unit(space, point[None, :])
        X = np.repeat(point[None, :], cfg.sequence_length, axis=0)
    elif kind == GeneratorKindEnum.FACE_WALK:
        X = _face_walk(space, values_x, steps, rng)
    elif kind == GeneratorKindEnum.RANDOM_TANGENT:
        X = _random_tangent(space, values_x, steps, rng)
    else:
        X = _cap_shrink(space, values_x, steps, rng)

    if functionals is not None:
        F = np.array([as_array(space, f, "f") for f in functionals])
    else:
        J = duality_map_array(space, values_x)
        F = np.vstack([J, J.mean(axis=0)[None, :]]) if len(J) > 1 else J
    traces = []
    for f in F:
        f = f / float(space.dual_norms(f)[0])
        face = exposed_face(space, f)
        values = (X @ f).tolist()
        distances = distances_to_set(space, X, face).tolist()
        traces.append(FunctionalTrace(
            functional=f.tolist(),
            values=values,
            face_distances=distances,
            tends_to_one=_tends_to_zero([1.0 - v for v in values], cfg.tol),
            tends_to_face=_tends_to_zero(distances, cfg.tol),
        ))
    to_point = space.norms(X - values_x).tolist()
    return ProbeReport(
        point=values_x.tolist(),
        generator=kind,
        sequence=X.tolist(),
        norm_sums=space.norms(X + values_x).tolist(),
        distances_to_point=to_point,
        traces=traces,
        converges_to_point=_tends_to_zero(to_point, cfg.tol),
        local_u_convex=any(t.tends_to_one for t in traces),
        strongly_local_u_convex=all(t.tends_to_one for t in traces),
        approaches_all_faces=all(t.tends_to_face for t in traces),
    )
