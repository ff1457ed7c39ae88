"""Large simulations against the theory. Deselected by default; run with ``pytest -m slow``."""

import pytest

from src.scripts import acceptance_sweep as sweep

pytestmark = pytest.mark.slow


def test_giant_on_cubic():
    result = sweep.giant_on_cubic(seed=1)
    assert result["v_giant_mean"] == pytest.approx(0.8987654321, abs=0.005)
    assert result["e_giant_mean"] == pytest.approx(1.2148148148, abs=0.01)


def test_criticality():
    result = sweep.criticality(seed=2)
    assert result["alpha_c"] == pytest.approx(1 / 6, abs=1e-6)
    assert result["v_giant_below"] >= 0.02
    assert result["v_giant_above"] <= 0.005


def test_threshold_kill():
    result = sweep.threshold_kill(seed=3)
    assert result["count_passed"], result
    assert result["bound_passed"], result


@pytest.mark.parametrize("seed", range(8))
def test_local_convergence(seed):
    result = sweep.local_convergence(seed=seed)
    assert result["tv_degree"] <= 0.02
    assert result["tv_pagerank"] <= 0.02
    assert result["violations"] == 0
    assert result["pairs_compared"] >= 10_000


def test_matching_frequencies():
    result = sweep.matching_frequencies(seed=5)
    assert result["loops"] == pytest.approx(1 / 3, abs=0.01)
    assert result["parallel"] == pytest.approx(2 / 3, abs=0.01)
