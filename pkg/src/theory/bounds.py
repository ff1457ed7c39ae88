"""
Bounds on the extinction probability and the giant fractions.

Every bound is evaluated from the removal moments and the extinction probability
eta; rho_upper_quad and e_upper do not depend on eta at all. rho_upper_positive
is only a bound when positively_correlated is set.
"""

from dataclasses import asdict, dataclass

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.settings import ASSERTION_TOL, MASS_TOL
from src.theory.exploded import RemovalMoments


@dataclass(frozen=True)
class Bounds:
    eta_lower: float
    rho_lower: float
    rho_upper_mvt: float
    rho_upper_quad: float
    rho_upper_alpha: float
    rho_upper_positive: float
    positively_correlated: bool
    e_upper: float

    def to_json(self):
        return asdict(self)


def bounds_from_moments(m: RemovalMoments, eta: float) -> Bounds:
    kept_mean = m.mean - m.edr
    eta_lower = m.edr / m.mean

    def rho_at(x):
        return 1.0 - m.alpha - float(np.dot(m.kept, np.power(x, m.degrees)))

    return Bounds(
        eta_lower=eta_lower,
        rho_lower=(m.mean * eta - m.edr) * (1.0 - eta),
        rho_upper_mvt=kept_mean * (1.0 - eta),
        rho_upper_quad=kept_mean ** 2 / m.mean,
        rho_upper_alpha=rho_at(eta_lower),
        rho_upper_positive=rho_at(m.alpha),
        positively_correlated=m.edr - m.mean * m.alpha >= -MASS_TOL,
        e_upper=kept_mean ** 2 / (2 * m.mean),
    )


def bounds(p: DegreeDistribution, r: AlphaSequence, eta: float) -> Bounds:
    return bounds_from_moments(RemovalMoments.of(p, r), eta)


def bound_violations(eta: float, rho: float, e: float, b: Bounds, tol: float = ASSERTION_TOL) -> list:
    """Names of the bounds that (eta, rho, e) break by more than ``tol``."""
    checks = {
        "eta_lower": eta >= b.eta_lower - tol,
        "rho_lower": rho >= b.rho_lower - tol,
        "rho_upper_mvt": rho <= b.rho_upper_mvt + tol,
        "rho_upper_quad": rho <= b.rho_upper_quad + tol,
        "rho_upper_alpha": rho <= b.rho_upper_alpha + tol,
        "rho_upper_positive": not b.positively_correlated or rho <= b.rho_upper_positive + tol,
        "e_upper": e <= b.e_upper + tol,
    }
    return [name for name, ok in checks.items() if not ok]
