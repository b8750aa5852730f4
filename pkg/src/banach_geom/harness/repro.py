"""
Golden reproduction of the l_inf tangent counterexample to HLUR.

With x = (1, 1), x_n = (0, 1) and x* = (1/2, 1/2) in (R^2, |.|_inf):
|x_n + x| = 2 for every n and x*(x) = 1, yet d(x_n, S(X, x*, 0)) = 1.
"""

import logging
from typing import Any, Dict, Optional

import numpy as np

from ..geometry.faces import exposed_face
from ..geometry.norms import distance_to_set, norm
from ..models.spaces.normed_space import NormedSpace
from ..utils.geom_errors import GeomAssertionError
from .catalogue import SpaceCatalogue

logger = logging.getLogger(__name__)

GOLDEN_TOL = 1e-12
GOLDEN_VALUES = {"norm_sum": 2.0, "functional_value": 1.0, "distance": 1.0}


def repro_linf_counterexample(
    catalogue: Optional[SpaceCatalogue] = None, epsilon: float = 0.0, check: Optional[bool] = None
) -> Dict[str, Any]:
    """
    Recompute the counterexample values, optionally with x_n = (epsilon, 1).

    ``check`` defaults to on for the unperturbed sequence and off otherwise;
    when on, any value off its golden value by more than 1e-12 raises.

    Examples:
        >>> report = repro_linf_counterexample()
        >>> report["norm_sum"], report["functional_value"], report["distance"], report["face"]
        (2.0, 1.0, 1.0, [[1.0, 1.0]])
        >>> round(repro_linf_counterexample(epsilon=1e-3)["distance"], 12)
        0.999
    """
    catalogue = catalogue if catalogue is not None else SpaceCatalogue()
    space: NormedSpace = catalogue.get("linf_2")
    check = epsilon == 0.0 if check is None else check

    x = np.array([1.0, 1.0])
    x_n = np.array([epsilon, 1.0])
    functional = np.array([0.5, 0.5])
    face = exposed_face(space, functional)
    report: Dict[str, Any] = {
        "x": x.tolist(),
        "x_n": x_n.tolist(),
        "functional": functional.tolist(),
        "norm_sum": norm(space, x_n + x),
        "functional_value": float(functional @ x),
        "distance": distance_to_set(space, x_n, face),
        "face": face.points,
        "checked": check,
    }
    if check:
        for key, expected in GOLDEN_VALUES.items():
            if abs(report[key] - expected) > GOLDEN_TOL:
                raise GeomAssertionError(
                    f"{key} = {report[key]!r}, expected {expected!r}",
                    error_code="ASSERT",
                    problem_data={"key": key, "value": report[key], "expected": expected},
                )
    logger.info("linf counterexample: norm_sum=%s distance=%s", report["norm_sum"], report["distance"])
    return report


def repro_example_5_5(catalogue: Optional[SpaceCatalogue] = None) -> Dict[str, Any]:
    """The unperturbed counterexample with its golden assertion; the `repro example-5-5` command."""
    return repro_linf_counterexample(catalogue)
