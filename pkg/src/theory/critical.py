"""
Critical removal fractions for top, bottom and uniform degree-based removal.

The critical fraction is the boundary between the alpha where nu_r(alpha) > 1 and
those where it fails. nu_r is non-increasing in alpha for all three modes, so
plain bisection finds it; the closed-form inequalities are swept on a grid as
an independent cross-check.
"""

import logging

import numpy as np
from scipy.optimize import bisect

from src.degrees.distributions import AlphaSequence, DegreeDistribution, moments
from src.degrees.quantiles import bottom_quantile_sequence, top_quantile_sequence
from src.errors import DomainError, NoGiantError, NumericalError
from src.settings import SOLVER_TOL
from src.theory.exploded import RemovalMoments

logger = logging.getLogger(__name__)

MODES = ("top", "bottom", "uniform")
GRID_STEP = 1e-3


def _check_mode(mode):
    if mode not in MODES:
        raise DomainError(f"unknown removal mode {mode!r}; expected one of {MODES}")


def removal_sequence(p: DegreeDistribution, mode: str, alpha: float) -> AlphaSequence:
    """The mode's alpha-sequence, defined for every alpha in [0, 1]."""
    _check_mode(mode)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    if mode == "uniform" or alpha in (0.0, 1.0):
        return AlphaSequence.constant(p, alpha)
    if mode == "top":
        r, _ = top_quantile_sequence(p, alpha)
    else:
        r, _ = bottom_quantile_sequence(p, alpha)
    return r


def supercritical_at(p: DegreeDistribution, mode: str, alpha: float) -> bool:
    """Closed-form check of nu_r(alpha) > 1 for the mode, without building the sequence."""
    _check_mode(mode)
    mean, nu = moments(p)
    if alpha <= 0.0:
        return nu > 1.0
    if alpha >= 1.0:
        return False
    d = p.degrees.astype(np.float64)
    falling = d * (d - 1) * p.probs
    if mode == "uniform":
        return float(falling.sum()) * (1.0 - alpha) > mean
    if mode == "top":
        _, k = top_quantile_sequence(p, alpha)
        beyond = p.tail(k + 1)
        kept = float(falling[p.degrees <= k].sum())
        return kept > mean + k * (k - 1) * (alpha - beyond)
    _, l = bottom_quantile_sequence(p, alpha)
    below = 1.0 - p.tail(l)
    kept = float(falling[p.degrees >= l].sum())
    return kept > mean + l * (l - 1) * (alpha - below)


def critical_alpha_grid(p: DegreeDistribution, mode: str, step: float = GRID_STEP) -> float:
    """Smallest grid point at which the inequality fails (1.0 when it never does)."""
    for alpha in np.arange(0.0, 1.0, step):
        if not supercritical_at(p, mode, float(alpha)):
            return float(alpha)
    return 1.0


def critical_alpha(p: DegreeDistribution, mode: str, tol: float = SOLVER_TOL, cross_check: bool = True) -> float:
    _check_mode(mode)
    _, nu = moments(p)
    if nu <= 1.0:
        raise NoGiantError(f"nu = {nu!r} <= 1: no giant component even before removal")

    def excess(alpha):
        return RemovalMoments.of(p, removal_sequence(p, mode, alpha)).nu_r - 1.0

    try:
        alpha_c = float(bisect(excess, 0.0, 1.0, xtol=tol))
    except RuntimeError as e:
        raise NumericalError(f"critical-alpha bisection did not converge: {e}") from e

    if cross_check:
        grid = critical_alpha_grid(p, mode)
        if abs(grid - alpha_c) > 2 * GRID_STEP:
            logger.error("critical alpha %.9g disagrees with the grid boundary %.9g (%s)", alpha_c, grid, mode)
        else:
            logger.debug("critical alpha %.9g agrees with the grid boundary %.9g", alpha_c, grid)
    return alpha_c
