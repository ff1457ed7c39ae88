"""
JSON form of distributions and alpha-sequences.

Degrees are decimal-string keys: {"p": {"1": 0.5, "3": 0.5}, "r": {"1": 0.0, "3": 0.5}}.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.errors import DomainError, InvalidDistributionError
from src.settings import SOLVER_TOL

MODES = ("top", "bottom", "uniform")


@dataclass(frozen=True)
class Job:
    """A theory job: a law plus either an explicit sequence or a (mode, alpha) pair."""

    p: DegreeDistribution
    r: Optional[AlphaSequence] = None
    mode: Optional[str] = None
    alpha: Optional[float] = None
    tol: float = SOLVER_TOL


def _degree_keyed(obj, what):
    if not isinstance(obj, dict):
        raise InvalidDistributionError(f"{what} must be a JSON object keyed by degree")
    parsed = {}
    for key, value in obj.items():
        try:
            degree = int(key)
        except (TypeError, ValueError):
            raise InvalidDistributionError(f"{what} key {key!r} is not a decimal degree") from None
        if str(degree) != str(key).strip():
            raise InvalidDistributionError(f"{what} key {key!r} is not a decimal degree")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidDistributionError(f"{what} value at degree {degree} is not a number")
        parsed[degree] = float(value)
    return parsed


def distribution_from_json(obj) -> DegreeDistribution:
    return DegreeDistribution.from_mapping(_degree_keyed(obj, "p"))


def alpha_sequence_from_json(obj) -> AlphaSequence:
    return AlphaSequence.from_mapping(_degree_keyed(obj, "r"))


def job_from_json(obj) -> Job:
    if not isinstance(obj, dict) or "p" not in obj:
        raise InvalidDistributionError("job must be an object with a 'p' field")
    p = distribution_from_json(obj["p"])
    tol = float(obj.get("tol", SOLVER_TOL))
    if "r" in obj:
        return Job(p=p, r=alpha_sequence_from_json(obj["r"]), tol=tol)
    mode, alpha = obj.get("mode"), obj.get("alpha")
    if mode not in MODES or alpha is None:
        raise DomainError(f"job needs either 'r' or 'mode' in {MODES} together with 'alpha'")
    return Job(p=p, mode=mode, alpha=float(alpha), tol=tol)


def read_json(path):
    with open(Path(path)) as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidDistributionError(f"{path} is not valid JSON: {e}") from e


def load_job(path) -> Job:
    return job_from_json(read_json(path))


def load_distribution(path) -> DegreeDistribution:
    """A law from a file holding either {"p": {...}} or the bare degree mapping."""
    obj = read_json(path)
    return distribution_from_json(obj["p"] if isinstance(obj, dict) and "p" in obj else obj)


def degree_keyed(mass: dict) -> dict:
    return {str(degree): value for degree, value in sorted(mass.items())}


def dump_distribution(p: DegreeDistribution, r: AlphaSequence = None) -> str:
    obj = {"p": degree_keyed(p.mass)}
    if r is not None:
        obj["r"] = degree_keyed(r.mass)
    return json.dumps(obj)
