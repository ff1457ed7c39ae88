"""Closed-form giant-component predictions for degree-based removal on configuration models."""

from src.theory.bounds import Bounds, bound_violations, bounds
from src.theory.cm_order import CmOrderComparison, cm_order_compare
from src.theory.critical import supercritical_at, critical_alpha, critical_alpha_grid, removal_sequence
from src.theory.curves import rho_along_chain, rho_curve
from src.theory.derivatives import DerivativeReport, derivative_report, finite_differences
from src.theory.exploded import ExplodedDistribution, exploded_nu_check, explode
from src.theory.fixed_point import JansonLuczak, TheoryReport, giant_fractions, janson_luczak, nu_r, solve_eta
