"""
Epsilon-transformations on alpha-sequences and on finite measures.

An EpsilonTransform(k, l, eps) moves eps of removal mass p_j r_j from degree
k + l down to degree k. A MeasureTransform(k, l, eps) moves eps of probability
mass from degree k up to degree k + l.
"""

from dataclasses import dataclass

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution, FiniteMeasure
from src.errors import DomainError
from src.settings import MASS_TOL


def _check_indices(k, l, eps):
    if k < 1 or l < 1:
        raise DomainError(f"need k >= 1 and l >= 1, got k={k}, l={l}")
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps!r}")


@dataclass(frozen=True)
class EpsilonTransform:
    k: int
    l: int
    eps: float

    def __post_init__(self):
        _check_indices(self.k, self.l, self.eps)

    def to_json(self):
        return {"k": self.k, "l": self.l, "eps": self.eps}


@dataclass(frozen=True)
class MeasureTransform:
    k: int
    l: int
    eps: float

    def __post_init__(self):
        _check_indices(self.k, self.l, self.eps)

    def to_json(self):
        return {"k": self.k, "l": self.l, "eps": self.eps}


def apply_epsilon_transform(p: DegreeDistribution, r: AlphaSequence, t: EpsilonTransform,
                            tol: float = MASS_TOL) -> AlphaSequence:
    if t.eps == 0:
        return r
    lower, upper = t.k, t.k + t.l
    p_lower, p_upper = p.prob(lower), p.prob(upper)
    if p_lower <= 0:
        raise DomainError(f"coordinate {lower} has no mass under p")
    if p_upper <= 0:
        raise DomainError(f"coordinate {upper} has no mass under p")
    r_lower, r_upper = r.value(lower), r.value(upper)
    if t.eps > p_upper * r_upper + tol:
        raise DomainError(
            f"eps={t.eps!r} exceeds p_{upper} r_{upper} = {p_upper * r_upper!r} at coordinate {upper}"
        )
    new_lower = r_lower + t.eps / p_lower
    if new_lower > 1 + tol:
        raise DomainError(f"coordinate {lower} would become {new_lower!r} > 1")
    new_upper = r_upper - t.eps / p_upper

    values = np.array(r.values)
    values[np.searchsorted(r.degrees, lower)] = min(new_lower, 1.0)
    values[np.searchsorted(r.degrees, upper)] = max(new_upper, 0.0)
    return AlphaSequence(r.degrees, values)


def apply_measure_transform(q: FiniteMeasure, t: MeasureTransform, tol: float = MASS_TOL) -> FiniteMeasure:
    mass = q.mass
    source, target = t.k, t.k + t.l
    available = mass.get(source, 0.0)
    if t.eps > available + tol:
        raise DomainError(f"eps={t.eps!r} exceeds the mass {available!r} at degree {source}")
    mass[source] = max(available - t.eps, 0.0)
    mass[target] = mass.get(target, 0.0) + t.eps
    return FiniteMeasure.from_mapping(mass)
