"""
Single-property dispatch and the cross-checking acceptance suite.

The suite runs every checker on every catalogue space in label order and
records where the results contradict each other: the ACS route against the
rotund-or-smooth route, rotund or smooth without ACS, HLUR against the
anti-Daugavet probe, slice shrinkage, certificates that do not re-verify,
norm axioms, and the D-set direction at the diagonal point.
"""

import logging
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from ..geometry.daugavet import anti_daugavet_probe
from ..geometry.norms import norm_axiom_spot_check, unit_rows
from ..geometry.properties import (
    check_acs,
    check_hlur,
    check_hs_slices,
    check_lur,
    check_rotund,
    check_smooth,
    dset_convergence,
    finite_dimensional_note,
    verify_certificate,
)
from ..models.enums.property_name_enum import PropertyNameEnum
from ..models.enums.verdict_status_enum import VerdictStatusEnum
from ..models.reports.probe_config import ProbeConfig
from ..models.reports.suite_report import SuiteReport
from ..models.reports.verdict import Verdict
from ..models.spaces.normed_space import NormedSpace
from ..utils.geom_errors import GeomUnknownPropertyError
from .catalogue import SpaceCatalogue
from .repro import repro_example_5_5

logger = logging.getLogger(__name__)

Checker = Callable[[NormedSpace, ProbeConfig], Verdict]

PROPERTY_CHECKERS: Dict[PropertyNameEnum, Checker] = {
    PropertyNameEnum.ROTUND: check_rotund,
    PropertyNameEnum.SMOOTH: check_smooth,
    PropertyNameEnum.ACS: check_acs,
    PropertyNameEnum.HLUR: check_hlur,
    PropertyNameEnum.HS: check_hs_slices,
    PropertyNameEnum.LUR: check_lur,
    PropertyNameEnum.ANTI_DAUGAVET: anti_daugavet_probe,
}

KNOWN_HLUR = {
    "l2_2": True,
    "lens_default": True,
    "stadium_default": True,
    "one_two_mix_2": True,
    "l1_2": False,
    "linf_2": False,
    "hexagon": False,
    "l2_3": True,
    "linf_3": False,
}

SUITE_PROPERTIES = [
    PropertyNameEnum.ROTUND,
    PropertyNameEnum.SMOOTH,
    PropertyNameEnum.ACS,
    PropertyNameEnum.HLUR,
    PropertyNameEnum.LUR,
    PropertyNameEnum.HS,
    PropertyNameEnum.ANTI_DAUGAVET,
]

VERIFIABLE = {"rotund", "smooth", "acs", "hlur", "lur", "anti-daugavet", "hs", "dset-convergence"}


def _property_name(prop) -> PropertyNameEnum:
    try:
        return prop if isinstance(prop, PropertyNameEnum) else PropertyNameEnum(prop)
    except ValueError as e:
        raise GeomUnknownPropertyError(f"Unknown property: {prop}", error_code="PROPERTY") from e


def run_check(catalogue: SpaceCatalogue, label: str, prop, cfg: Optional[ProbeConfig] = None) -> Verdict:
    """
    Check one property of one catalogue space.

    Examples:
        >>> run_check(SpaceCatalogue(), "l2_2", "rotund").status.value
        'holds-exact'
    """
    cfg = cfg if cfg is not None else ProbeConfig()
    space = catalogue.get(label)
    name = _property_name(prop)
    if name.automatic_in_finite_dimensions:
        return finite_dimensional_note(name, cfg)
    logger.debug("checking %s on %s", name.value, label)
    return PROPERTY_CHECKERS[name](space, cfg)


def diagonal_point(space: NormedSpace) -> np.ndarray:
    """unit(1, ..., 1), the point where the polyhedral catalogue balls have a vertex."""
    return unit_rows(space, np.ones((1, space.dim)))[0]


def _cross_check(label: str, space: NormedSpace, verdicts: Dict[str, Verdict], cfg: ProbeConfig) -> List[str]:
    failures: List[str] = []
    rotund, smooth, acs, hlur = (verdicts[k] for k in ("rotund", "smooth", "acs", "hlur"))

    if space.dim <= 2 and acs.holds != (rotund.holds or smooth.holds):
        failures.append(f"{label}: ACS verdict disagrees with rotund-or-smooth")
    if rotund.holds and not acs.holds:
        failures.append(f"{label}: rotund but not ACS")
    if smooth.holds and not acs.holds:
        failures.append(f"{label}: smooth but not ACS")
    if hlur.status == VerdictStatusEnum.INCONCLUSIVE:
        failures.append(f"{label}: HLUR routes disagree")
    if hlur.holds != verdicts["anti-daugavet"].holds:
        failures.append(f"{label}: HLUR is {hlur.status.value} but anti-Daugavet is {verdicts['anti-daugavet'].status.value}")
    if label in KNOWN_HLUR and hlur.holds != KNOWN_HLUR[label]:
        failures.append(f"{label}: HLUR is {hlur.status.value}, expected {'holds' if KNOWN_HLUR[label] else 'fails'}")
    if not verdicts["hs"].holds:
        failures.append(f"{label}: slices do not shrink to their faces")
    if not verdicts["norm-axioms"].holds:
        failures.append(f"{label}: norm axioms violated")
    if hlur.holds and not verdicts["dset-convergence"].holds:
        failures.append(f"{label}: HLUR but D-sets do not converge at the diagonal point")

    for name, verdict in verdicts.items():
        if verdict.status != VerdictStatusEnum.FAILS or name not in VERIFIABLE:
            continue
        if verify_certificate(space, name, verdict.certificate, cfg).status != VerdictStatusEnum.FAILS:
            failures.append(f"{label}: {name} certificate does not re-verify")
    return failures


def run_space(space: NormedSpace, cfg: ProbeConfig) -> Dict[str, Verdict]:
    verdicts: Dict[str, Verdict] = {
        "norm-axioms": norm_axiom_spot_check(space, seed=cfg.effective_seed),
    }
    for name in SUITE_PROPERTIES:
        verdicts[name.value] = PROPERTY_CHECKERS[name](space, cfg)
    verdicts["dset-convergence"] = dset_convergence(space, diagonal_point(space), cfg, hlur=verdicts["hlur"])
    for name in PropertyNameEnum:
        if name.automatic_in_finite_dimensions:
            verdicts[name.value] = finite_dimensional_note(name, cfg)
    return verdicts


def run_suite(catalogue: Optional[SpaceCatalogue] = None, cfg: Optional[ProbeConfig] = None) -> SuiteReport:
    """
    Run every checker on every catalogue space and cross-check the results.

    The report holds no timing, so equal seeds and configs give
    byte-identical canonical JSON; timings go to the log.
    """
    catalogue = catalogue if catalogue is not None else SpaceCatalogue()
    cfg = cfg if cfg is not None else ProbeConfig()
    table: Dict[str, Dict[str, str]] = {}
    all_verdicts: Dict[str, Dict[str, Verdict]] = {}
    failures: List[str] = []

    for label in sorted(catalogue.labels):
        space = catalogue.get(label)
        started = time.perf_counter()
        verdicts = run_space(space, cfg)
        logger.info("suite: %s done in %.2fs", label, time.perf_counter() - started)
        all_verdicts[label] = verdicts
        table[label] = {name: verdict.status.value for name, verdict in verdicts.items()}
        failures.extend(_cross_check(label, space, verdicts, cfg))

    repro = repro_example_5_5(catalogue) if "linf_2" in catalogue else {}
    for failure in failures:
        logger.error("cross-check failed: %s", failure)
    return SuiteReport(
        seed=cfg.effective_seed,
        config=cfg.to_json_dict(),
        table=table,
        verdicts=all_verdicts,
        cross_check_failures=failures,
        repro=repro,
    )
