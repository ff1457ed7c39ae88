"""Degree laws, alpha-sequences, quantile removal and stochastic ordering."""

from src.degrees.distributions import AlphaSequence, DegreeDistribution, FiniteMeasure, alpha_of, moments
from src.degrees.dominance import (
    decompose_to_transforms,
    dominates,
    dominating_delta,
    first_tail_violation,
    general_comparison_chain,
    measure_dominates,
)
from src.degrees.quantiles import bottom_quantile_sequence, top_quantile_sequence
from src.degrees.transforms import (
    EpsilonTransform,
    MeasureTransform,
    apply_epsilon_transform,
    apply_measure_transform,
)
