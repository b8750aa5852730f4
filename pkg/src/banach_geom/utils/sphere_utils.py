"""
Optimisation helpers over the unit sphere.

Planar spheres are searched through the angle parametrisation
theta -> (cos theta, sin theta), scaled radially onto the sphere by the
caller: a dense grid locates the best cell and a bounded scalar search
refines it. Higher dimensions use seeded multistart Nelder-Mead on the
homogeneous objective, whose best value is a bound rather than a certificate.
"""

import logging
import math
from typing import Callable, Iterable, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize, minimize_scalar

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
REFINE_XATOL = 1e-12


def angle_directions(thetas: np.ndarray) -> np.ndarray:
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    return np.column_stack([np.cos(thetas), np.sin(thetas)])


def grid_thetas(count: int) -> np.ndarray:
    return np.arange(count, dtype=float) * (TWO_PI / count)


def grid_extremum(
    fn: Callable[[np.ndarray], np.ndarray],
    count: int,
    maximize: bool = False,
    extra_thetas: Optional[Iterable[float]] = None,
) -> Tuple[float, float]:
    """
    Extremum of a function of the angle over [0, 2 pi).

    Args:
        fn: vectorised objective, angles (m,) -> values (m,)
        count: number of equally spaced grid angles
        maximize: search the maximum instead of the minimum
        extra_thetas: angles evaluated in addition to the grid (known candidates)

    Returns:
        (value, theta) of the best point found; ties go to the first angle
    """
    sign = -1.0 if maximize else 1.0
    thetas = grid_thetas(count)
    if extra_thetas is not None:
        thetas = np.concatenate([thetas, np.mod(np.asarray(list(extra_thetas), dtype=float), TWO_PI)])
    values = sign * fn(thetas)
    best = int(np.argmin(values))
    best_theta, best_value = float(thetas[best]), float(values[best])
    h = TWO_PI / count
    result = minimize_scalar(
        lambda t: sign * float(fn(np.array([t]))[0]),
        bounds=(best_theta - h, best_theta + h),
        method="bounded",
        options={"xatol": REFINE_XATOL},
    )
    if result.success and result.fun < best_value:
        best_theta, best_value = float(result.x), float(result.fun)
    return sign * best_value, best_theta % TWO_PI


def multistart_extremum(
    fn: Callable[[np.ndarray], np.ndarray],
    dim: int,
    starts: int,
    rng: np.random.Generator,
    maximize: bool = False,
    hints: Optional[np.ndarray] = None,
) -> Tuple[float, np.ndarray]:
    """
    Multistart Nelder-Mead for a 0-homogeneous objective on R^n minus the origin.

    Args:
        fn: vectorised objective, rows (m, n) -> values (m,); invariant under positive scaling
        dim: dimension n
        starts: number of seeded Gaussian starting points
        rng: generator of the starting points
        maximize: search the maximum instead of the minimum
        hints: extra starting rows (known candidates)

    Returns:
        (value, x) of the best point found, x normalised to Euclidean length 1
    """
    sign = -1.0 if maximize else 1.0
    X0 = rng.standard_normal((starts, dim))
    if hints is not None and len(hints):
        X0 = np.vstack([np.atleast_2d(hints), X0])

    def objective(z: np.ndarray) -> float:
        if not np.any(z):
            return math.inf
        return sign * float(fn(z[None, :])[0])

    start_values = sign * fn(X0)
    best = int(np.argmin(start_values))
    best_x, best_value = X0[best], float(start_values[best])
    for x0 in X0:
        result = minimize(objective, x0, method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
        if result.fun < best_value:
            best_x, best_value = result.x, float(result.fun)
    logger.debug("multistart_extremum: %d starts, best %.12g", len(X0), sign * best_value)
    return sign * best_value, best_x / np.linalg.norm(best_x)


def first_crossing(
    phi: Callable[[float], float],
    threshold: float,
    s_grid: np.ndarray,
) -> Optional[float]:
    """
    First parameter s of the grid path at which phi drops below threshold, refined by brentq.

    Returns None when phi stays at or above threshold on the whole grid.
    """
    previous = float(s_grid[0])
    for s in s_grid[1:]:
        s = float(s)
        if phi(s) < threshold:
            if phi(previous) - threshold <= 0.0:
                return previous
            return brentq(lambda t: phi(t) - threshold, previous, s, xtol=1e-15, rtol=4 * np.finfo(float).eps)
        previous = s
    return None
