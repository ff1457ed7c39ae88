"""
Sensitivity of eta, rho and e to an epsilon-transformation r -> r^{k,l}(eps).

Closed forms come from differentiating the fixed-point equation implicitly;
finite_differences recomputes the same three quantities numerically for validation.
"""

from dataclasses import asdict, dataclass

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.degrees.transforms import EpsilonTransform, apply_epsilon_transform
from src.errors import DomainError, RegimeError
from src.settings import FD_RTOL, FD_STEP, SOLVER_TOL
from src.theory.exploded import RemovalMoments
from src.theory.fixed_point import giant_from_moments, solve_from_moments


@dataclass(frozen=True)
class DerivativeReport:
    deta: float
    drho: float
    de: float
    A_eps: float
    B_eps: float

    def to_json(self):
        return asdict(self)


def transform_range(p: DegreeDistribution, r: AlphaSequence, k: int, l: int) -> float:
    """Largest eps for which r^{k,l}(eps) is still an alpha-sequence."""
    return min(p.prob(k + l) * r.value(k + l, 0.0), p.prob(k) * (1.0 - r.value(k, 0.0)))


def _transformed(p, r, k, l, eps):
    if eps < 0 or eps > transform_range(p, r, k, l) + 1e-15:
        raise DomainError(f"eps={eps!r} is outside [0, {transform_range(p, r, k, l)!r}] for k={k}, l={l}")
    return apply_epsilon_transform(p, r, EpsilonTransform(k=k, l=l, eps=eps))


def derivative_report(p: DegreeDistribution, r: AlphaSequence, k: int, l: int, eps: float,
                      tol: float = SOLVER_TOL) -> DerivativeReport:
    m = RemovalMoments.of(p, _transformed(p, r, k, l, eps))
    if m.nu_r <= 1.0:
        raise RegimeError(f"nu_r = {m.nu_r!r} <= 1 after the transform; derivatives need a giant")
    eta = solve_from_moments(m, tol)

    d = m.degrees
    inner = d >= 2
    curvature = float(np.dot((d * (d - 1) * m.kept)[inner], np.power(eta, d[inner] - 2)))
    numerator = (k + l) * eta ** (k + l - 1) - k * eta ** (k - 1) - l
    deta = numerator / (m.mean - curvature)

    a_eps = m.mean * eta - m.edr
    b_eps = eta ** k * (1.0 - eta ** l)
    return DerivativeReport(
        deta=deta,
        drho=-a_eps * deta + b_eps,
        de=-a_eps * deta + l * (1.0 - eta),
        A_eps=a_eps,
        B_eps=b_eps,
    )


def _state(p, r, k, l, eps, tol):
    m = RemovalMoments.of(p, _transformed(p, r, k, l, eps))
    eta = solve_from_moments(m, tol)
    rho, e = giant_from_moments(m, eta)
    return np.array([eta, rho, e])


def finite_differences(p: DegreeDistribution, r: AlphaSequence, k: int, l: int, eps: float,
                       h: float = FD_STEP, tol: float = SOLVER_TOL) -> np.ndarray:
    """(deta, drho, de) by central differences, one-sided second order at the ends of the range."""
    upper = transform_range(p, r, k, l)
    if eps - h >= 0 and eps + h <= upper:
        return (_state(p, r, k, l, eps + h, tol) - _state(p, r, k, l, eps - h, tol)) / (2 * h)
    if eps + 2 * h <= upper:
        f0, f1, f2 = (_state(p, r, k, l, eps + i * h, tol) for i in range(3))
        return (-3 * f0 + 4 * f1 - f2) / (2 * h)
    f0, f1, f2 = (_state(p, r, k, l, eps - i * h, tol) for i in range(3))
    return (3 * f0 - 4 * f1 + f2) / (2 * h)


def derivatives_agree(report: DerivativeReport, numeric: np.ndarray, rtol: float = FD_RTOL) -> bool:
    closed = np.array([report.deta, report.drho, report.de])
    return bool(np.all(np.abs(closed - numeric) <= rtol * np.abs(closed)))
