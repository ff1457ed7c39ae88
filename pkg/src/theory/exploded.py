"""Degree law of the graph after every removed vertex is exploded into degree-1 vertices."""

from dataclasses import dataclass

import numpy as np

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DegenerateInputError

_MIN_BETA = 1e-14


@dataclass(frozen=True)
class ExplodedDistribution:
    p_tilde: DegreeDistribution
    beta: float


@dataclass(frozen=True)
class RemovalMoments:
    """Sums over the support shared by the fixed point, the bounds and the derivatives."""

    degrees: np.ndarray
    probs: np.ndarray
    r: np.ndarray
    mean: float
    alpha: float
    edr: float

    @classmethod
    def of(cls, p: DegreeDistribution, r: AlphaSequence) -> "RemovalMoments":
        d = p.degrees.astype(np.float64)
        rr = r.aligned(p)
        return cls(
            degrees=d,
            probs=p.probs,
            r=rr,
            mean=float(np.dot(d, p.probs)),
            alpha=float(np.dot(p.probs, rr)),
            edr=float(np.dot(d * p.probs, rr)),
        )

    @property
    def kept(self) -> np.ndarray:
        """(1 - r_i) p_i."""
        return (1.0 - self.r) * self.probs

    @property
    def beta(self) -> float:
        return self.edr + 1.0 - self.alpha

    @property
    def nu_r(self) -> float:
        d = self.degrees
        return float(np.dot(d * (d - 1), self.kept) / self.mean)

    @property
    def first_exploded_mass(self) -> float:
        """beta * p_tilde_1, i.e. E[D r_D] + p_1 (1 - r_1)."""
        return self.edr + float(self.kept[self.degrees == 1].sum())


def explode(p: DegreeDistribution, r: AlphaSequence) -> ExplodedDistribution:
    m = RemovalMoments.of(p, r)
    beta = m.beta
    if beta <= _MIN_BETA:
        raise DegenerateInputError(f"beta = {beta!r} is not positive")

    mass = {int(d): float(k) / beta for d, k in zip(p.degrees, m.kept)}
    mass[1] = m.first_exploded_mass / beta
    return ExplodedDistribution(p_tilde=DegreeDistribution.from_mapping(mass), beta=beta)


def exploded_nu_check(p: DegreeDistribution, r: AlphaSequence) -> float:
    """E[D~(D~ - 2)] under the exploded law; positive exactly when nu_r > 1."""
    p_tilde = explode(p, r).p_tilde
    d = p_tilde.degrees.astype(np.float64)
    return float(np.dot(d * (d - 2), p_tilde.probs))
