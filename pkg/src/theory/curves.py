"""Giant fractions along a removal-fraction grid and along an epsilon-transformation chain."""

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.degrees.transforms import apply_epsilon_transform
from src.settings import SOLVER_TOL
from src.theory.critical import removal_sequence
from src.theory.fixed_point import giant_fractions


def rho_curve(p: DegreeDistribution, mode: str, alphas, tol: float = SOLVER_TOL) -> list:
    """[(alpha, rho, e)] for the mode's removal sequence at each alpha."""
    rows = []
    for alpha in alphas:
        report = giant_fractions(p, removal_sequence(p, mode, float(alpha)), tol)
        rows.append((float(alpha), report.rho, report.e))
    return rows


def rho_along_chain(p: DegreeDistribution, r: AlphaSequence, transforms, tol: float = SOLVER_TOL) -> list:
    """[(rho, e)] at r and after each transform in turn."""
    report = giant_fractions(p, r, tol)
    rows = [(report.rho, report.e)]
    for t in transforms:
        r = apply_epsilon_transform(p, r, t)
        report = giant_fractions(p, r, tol)
        rows.append((report.rho, report.e))
    return rows
