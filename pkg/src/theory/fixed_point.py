"""
Half-edge extinction probability and the giant-component fractions after removal.

The fixed point is the smallest root in [0, 1] of

    h(x) = sum_i i (1 - r_i) p_i x^(i-1) + E[D r_D] - E[D] x,

which is beta_r g_r'(x) - E[D] x written without forming the exploded law. h(1) = 0
always, so the bracket for the interior root is kept strictly below 1.
"""

import logging
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import bisect

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import NumericalError
from src.settings import SOLVER_INITIAL_GAP, SOLVER_MAX_BRACKET_SHRINKS, SOLVER_MAX_ITERATIONS, SOLVER_TOL
from src.theory.bounds import Bounds, bounds_from_moments
from src.theory.exploded import RemovalMoments, explode

logger = logging.getLogger(__name__)


def nu_r(p: DegreeDistribution, r: AlphaSequence) -> float:
    return RemovalMoments.of(p, r).nu_r


def fixed_point_residual(m: RemovalMoments, x: float) -> float:
    d = m.degrees
    return float(np.dot(d * m.kept, np.power(x, d - 1)) + m.edr - m.mean * x)


def solve_from_moments(m: RemovalMoments, tol: float) -> float:
    if m.nu_r <= 1.0:
        logger.debug("nu_r = %.6g <= 1: subcritical, eta = 1", m.nu_r)
        return 1.0
    if m.first_exploded_mass <= 0.0:
        logger.debug("no degree-1 mass after explosion: eta = 0")
        return 0.0

    gap = SOLVER_INITIAL_GAP
    for _ in range(SOLVER_MAX_BRACKET_SHRINKS):
        if fixed_point_residual(m, 1.0 - gap) < 0:
            break
        logger.debug("h(1 - %.3g) >= 0, shrinking the bracket", gap)
        gap /= 2
    else:
        raise NumericalError(
            f"no sign change below 1 after {SOLVER_MAX_BRACKET_SHRINKS} shrinks (nu_r = {m.nu_r!r} is too close to 1)"
        )

    try:
        # the width is driven below tol so that the residual, not the bracket, sets the accuracy
        eta = bisect(lambda x: fixed_point_residual(m, x), 0.0, 1.0 - gap,
                     xtol=tol * 1e-2, maxiter=SOLVER_MAX_ITERATIONS)
    except RuntimeError as e:
        raise NumericalError(f"bisection did not converge: {e}") from e

    residual = abs(fixed_point_residual(m, eta))
    if residual > tol * m.mean:
        logger.warning("fixed-point residual %.3g exceeds %.3g", residual, tol * m.mean)
    return float(eta)


def solve_eta(p: DegreeDistribution, r: AlphaSequence, tol: float = SOLVER_TOL) -> float:
    return solve_from_moments(RemovalMoments.of(p, r), tol)


@dataclass(frozen=True)
class TheoryReport:
    alpha: float
    nu_r: float
    beta: float
    eta: float
    rho: float
    e: float
    supercritical: bool
    p_tilde: dict
    bounds: Bounds = field(repr=False)

    def to_json(self):
        out = asdict(self)
        out["p_tilde"] = {str(d): v for d, v in sorted(self.p_tilde.items())}
        return out


def giant_from_moments(m: RemovalMoments, eta: float):
    """(rho, e) at extinction probability eta; both zero when nu_r <= 1."""
    if m.nu_r <= 1.0:
        return 0.0, 0.0
    rho = 1.0 - m.alpha - float(np.dot(m.kept, np.power(eta, m.degrees)))
    e = m.mean / 2 * (1.0 - eta ** 2) - m.edr * (1.0 - eta)
    return max(rho, 0.0), max(e, 0.0)


def giant_fractions(p: DegreeDistribution, r: AlphaSequence, tol: float = SOLVER_TOL) -> TheoryReport:
    m = RemovalMoments.of(p, r)
    eta = solve_from_moments(m, tol)
    rho, e = giant_from_moments(m, eta)
    exploded = explode(p, r)
    return TheoryReport(
        alpha=m.alpha,
        nu_r=m.nu_r,
        beta=exploded.beta,
        eta=eta,
        rho=rho,
        e=e,
        supercritical=m.nu_r > 1.0,
        p_tilde=exploded.p_tilde.mass,
        bounds=bounds_from_moments(m, eta),
    )


@dataclass(frozen=True)
class JansonLuczak:
    eta: float
    rho: float
    per_degree: dict
    e: float

    def to_json(self):
        out = asdict(self)
        out["per_degree"] = {str(d): v for d, v in sorted(self.per_degree.items())}
        return out


def janson_luczak(p: DegreeDistribution, tol: float = SOLVER_TOL) -> JansonLuczak:
    """Giant of the unremoved configuration model from g_D'(eta) = E[D] eta."""
    m = RemovalMoments.of(p, AlphaSequence.constant(p, 0.0))
    eta = solve_from_moments(m, tol)
    if eta >= 1.0:
        return JansonLuczak(eta=1.0, rho=0.0, per_degree={int(d): 0.0 for d in p.degrees}, e=0.0)
    per_degree = p.probs * (1.0 - np.power(eta, m.degrees))
    return JansonLuczak(
        eta=eta,
        rho=float(per_degree.sum()),
        per_degree={int(d): float(v) for d, v in zip(p.degrees, per_degree)},
        e=m.mean / 2 * (1.0 - eta ** 2),
    )
