"""
Finite-support degree laws, alpha-sequences and finite measures.

All three types are immutable: their numpy arrays are frozen at construction
and every operation returns a new object.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from src.errors import DomainError, InvalidDistributionError
from src.settings import MASS_TOL

# masses below this are exact zeros for transport plans
_ZERO_MASS = 1e-15


def _frozen(array):
    array.setflags(write=False)
    return array


def _sorted_items(mass: Mapping[int, float]):
    try:
        items = sorted((int(degree), float(value)) for degree, value in mass.items())
    except (TypeError, ValueError) as e:
        raise InvalidDistributionError(f"degrees must be integers and masses reals: {e}") from e
    degrees = np.array([d for d, _ in items], dtype=np.int64)
    values = np.array([v for _, v in items], dtype=np.float64)
    return degrees, values


@dataclass(frozen=True, eq=False)
class DegreeDistribution:
    """Law (p_j)_{j>=1} of the limiting degree D on {1, ..., d_max}."""

    degrees: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        degrees = np.asarray(self.degrees, dtype=np.int64).copy()
        probs = np.asarray(self.probs, dtype=np.float64).copy()
        if degrees.ndim != 1 or degrees.shape != probs.shape:
            raise InvalidDistributionError("degrees and probabilities must be equal-length vectors")
        if degrees.size == 0:
            raise InvalidDistributionError("support must not be empty")
        if np.any(degrees < 1):
            raise InvalidDistributionError(
                f"degree {int(degrees[degrees < 1][0])} is not representable: degrees must be >= 1"
            )
        if np.any(np.diff(degrees) <= 0):
            raise InvalidDistributionError("degrees must be strictly increasing without duplicates")
        if not np.all(np.isfinite(probs)):
            raise InvalidDistributionError("masses must be finite")
        if np.any(probs < 0):
            bad = int(degrees[probs < 0][0])
            raise InvalidDistributionError(f"mass at degree {bad} is negative")
        total = probs.sum()
        if abs(total - 1.0) > MASS_TOL:
            raise InvalidDistributionError(f"masses sum to {total!r}, not 1 within {MASS_TOL}")
        object.__setattr__(self, "degrees", _frozen(degrees))
        object.__setattr__(self, "probs", _frozen(probs))

    @classmethod
    def from_mapping(cls, mass: Mapping[int, float]) -> "DegreeDistribution":
        degrees, probs = _sorted_items(mass)
        return cls(degrees, probs)

    @classmethod
    def regular(cls, d: int) -> "DegreeDistribution":
        return cls(np.array([d]), np.array([1.0]))

    @classmethod
    def from_counts(cls, degree_sequence: Iterable[int]) -> "DegreeDistribution":
        """Empirical law n_j / n of a degree sequence (degree-0 entries are dropped)."""
        seq = np.asarray(list(degree_sequence), dtype=np.int64)
        seq = seq[seq >= 1]
        if seq.size == 0:
            raise InvalidDistributionError("degree sequence has no vertex of degree >= 1")
        degrees, counts = np.unique(seq, return_counts=True)
        return cls(degrees, counts / counts.sum())

    @classmethod
    def truncated_power_law(cls, tau: float, d_max: int, d_min: int = 1) -> "DegreeDistribution":
        """p_j proportional to j^{-tau} on {d_min, ..., d_max}, renormalised.

        Truncation at d_max is the finite-support stand-in for a power-law target.
        """
        if d_min < 1 or d_max < d_min:
            raise DomainError(f"need 1 <= d_min <= d_max, got d_min={d_min}, d_max={d_max}")
        degrees = np.arange(d_min, d_max + 1)
        weights = degrees.astype(np.float64) ** (-float(tau))
        return cls(degrees, weights / weights.sum())

    @property
    def d_max(self) -> int:
        return int(self.degrees[-1])

    @property
    def mass(self) -> dict:
        return {int(d): float(p) for d, p in zip(self.degrees, self.probs)}

    @property
    def mean(self) -> float:
        return float(np.dot(self.degrees, self.probs))

    def prob(self, degree: int) -> float:
        idx = np.searchsorted(self.degrees, degree)
        if idx < self.degrees.size and self.degrees[idx] == degree:
            return float(self.probs[idx])
        return 0.0

    def tail(self, degree: int) -> float:
        """P(D >= degree)."""
        return float(self.probs[self.degrees >= degree].sum())

    def __repr__(self):
        return f"DegreeDistribution({self.mass})"


@dataclass(frozen=True, eq=False)
class AlphaSequence:
    """Per-degree removal fractions r_j in [0, 1]."""

    degrees: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        degrees = np.asarray(self.degrees, dtype=np.int64).copy()
        values = np.asarray(self.values, dtype=np.float64).copy()
        if degrees.ndim != 1 or degrees.shape != values.shape:
            raise DomainError("degrees and fractions must be equal-length vectors")
        if np.any(np.diff(degrees) <= 0):
            raise DomainError("degrees must be strictly increasing without duplicates")
        if not np.all(np.isfinite(values)):
            raise DomainError("fractions must be finite")
        out_of_range = (values < -MASS_TOL) | (values > 1 + MASS_TOL)
        if np.any(out_of_range):
            bad = int(degrees[out_of_range][0])
            raise DomainError(f"fraction at degree {bad} is outside [0, 1]: {values[out_of_range][0]!r}")
        object.__setattr__(self, "degrees", _frozen(degrees))
        object.__setattr__(self, "values", _frozen(np.clip(values, 0.0, 1.0)))

    @classmethod
    def from_mapping(cls, r: Mapping[int, float]) -> "AlphaSequence":
        degrees, values = _sorted_items(r)
        return cls(degrees, values)

    @classmethod
    def constant(cls, p: DegreeDistribution, value: float) -> "AlphaSequence":
        return cls(p.degrees, np.full(p.degrees.shape, float(value)))

    @classmethod
    def on(cls, p: DegreeDistribution, values) -> "AlphaSequence":
        return cls(p.degrees, np.asarray(values, dtype=np.float64))

    @property
    def mass(self) -> dict:
        return {int(d): float(v) for d, v in zip(self.degrees, self.values)}

    def value(self, degree: int, default=None):
        idx = np.searchsorted(self.degrees, degree)
        if idx < self.degrees.size and self.degrees[idx] == degree:
            return float(self.values[idx])
        if default is None:
            raise DomainError(f"alpha-sequence has no value at degree {degree}")
        return default

    def aligned(self, p: DegreeDistribution) -> np.ndarray:
        """r_j for j in p's support; zero-mass degrees of p may be missing (read as 0)."""
        present = np.isin(p.degrees, self.degrees)
        missing = ~present & (p.probs > 0)
        if np.any(missing):
            raise DomainError(f"alpha-sequence has no value at degree {int(p.degrees[missing][0])}")
        out = np.zeros(p.degrees.shape, dtype=np.float64)
        out[present] = self.values[np.searchsorted(self.degrees, p.degrees[present])]
        return out

    def __repr__(self):
        return f"AlphaSequence({self.mass})"


@dataclass(frozen=True, eq=False)
class FiniteMeasure:
    """Non-negative finite measure on degrees, e.g. q_j = p_j r_j."""

    degrees: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        degrees = np.asarray(self.degrees, dtype=np.int64).copy()
        masses = np.asarray(self.masses, dtype=np.float64).copy()
        if degrees.ndim != 1 or degrees.shape != masses.shape:
            raise DomainError("degrees and masses must be equal-length vectors")
        if np.any(np.diff(degrees) <= 0):
            raise DomainError("degrees must be strictly increasing without duplicates")
        if not np.all(np.isfinite(masses)):
            raise DomainError("masses must be finite")
        if np.any(masses < -MASS_TOL):
            raise DomainError(f"mass at degree {int(degrees[masses < -MASS_TOL][0])} is negative")
        object.__setattr__(self, "degrees", _frozen(degrees))
        object.__setattr__(self, "masses", _frozen(np.maximum(masses, 0.0)))

    @classmethod
    def from_mapping(cls, mass: Mapping[int, float]) -> "FiniteMeasure":
        degrees, masses = _sorted_items(mass)
        return cls(degrees, masses)

    @classmethod
    def of(cls, p: DegreeDistribution, r: AlphaSequence = None) -> "FiniteMeasure":
        """q = p * r, or p itself when r is omitted."""
        if r is None:
            return cls(p.degrees, p.probs)
        return cls(p.degrees, p.probs * r.aligned(p))

    @property
    def total(self) -> float:
        return float(self.masses.sum())

    @property
    def mass(self) -> dict:
        return {int(d): float(m) for d, m in zip(self.degrees, self.masses)}

    def on_degrees(self, degrees: np.ndarray) -> np.ndarray:
        """Masses re-indexed onto a superset of degrees (absent degrees read as 0)."""
        out = np.zeros(len(degrees), dtype=np.float64)
        idx = np.searchsorted(degrees, self.degrees)
        out[idx] = self.masses
        return out

    def tails(self, degrees: np.ndarray) -> np.ndarray:
        """mu([K, inf)) for each K in the sorted array ``degrees`` (a superset of the support)."""
        return np.cumsum(self.on_degrees(degrees)[::-1])[::-1]

    def transport_to(self, target: "FiniteMeasure", tol: float = MASS_TOL):
        """Monotone coupling of this measure's surplus with its deficit against ``target``.

        Returns (from_degree, to_degree, mass) moves. Receivers and givers are both
        consumed in increasing degree order, so the plan is the quantile coupling of
        the two difference measures. Total masses must agree within ``tol``.
        """
        if abs(self.total - target.total) > tol:
            raise DomainError(f"measures differ in total mass: {self.total!r} vs {target.total!r}")
        degrees = np.union1d(self.degrees, target.degrees)
        diff = target.on_degrees(degrees) - self.on_degrees(degrees)

        receivers = [[int(d), float(m)] for d, m in zip(degrees, diff) if m > _ZERO_MASS]
        givers = [[int(d), float(-m)] for d, m in zip(degrees, diff) if m < -_ZERO_MASS]

        moves = []
        a = b = 0
        while a < len(receivers) and b < len(givers):
            amount = min(receivers[a][1], givers[b][1])
            if amount > 0:
                moves.append((givers[b][0], receivers[a][0], amount))
            receivers[a][1] -= amount
            givers[b][1] -= amount
            if receivers[a][1] <= _ZERO_MASS:
                a += 1
            if givers[b][1] <= _ZERO_MASS:
                b += 1

        leftover = sum(m for _, m in receivers[a:]) + sum(m for _, m in givers[b:])
        if leftover > tol:
            raise DomainError(f"transport left {leftover!r} mass unmatched")
        return moves


def moments(p: DegreeDistribution):
    """(E[D], nu) with nu = E[D(D-1)] / E[D]."""
    d = p.degrees.astype(np.float64)
    mean = float(np.dot(d, p.probs))
    nu = float(np.dot(d * (d - 1), p.probs) / mean)
    return mean, nu


def alpha_of(p: DegreeDistribution, r: AlphaSequence) -> float:
    return float(np.dot(p.probs, r.aligned(p)))
