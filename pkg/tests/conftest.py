import numpy as np
import pytest

from src.degrees.distributions import AlphaSequence, DegreeDistribution
from src.degrees.transforms import EpsilonTransform, apply_epsilon_transform
from src.graphs.half_edge_graph import HalfEdgeGraph
from src.theory.derivatives import transform_range
from src.theory.exploded import RemovalMoments


@pytest.fixture
def p13():
    """p_1 = p_3 = 1/2: eta = 1/3 before removal."""
    return DegreeDistribution.from_mapping({1: 0.5, 3: 0.5})


@pytest.fixture
def cubic():
    return DegreeDistribution.regular(3)


@pytest.fixture
def mixed():
    return DegreeDistribution.from_mapping({1: 0.2, 2: 0.3, 3: 0.3, 5: 0.2})


@pytest.fixture
def star():
    """K_{1,3} with centre 0."""
    return HalfEdgeGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def cycle():
    n = 10
    return HalfEdgeGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def two_triangles():
    """Two triangles on 0-2 and 3-5 plus the isolated vertex 6."""
    return HalfEdgeGraph.from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def random_distribution(rng, max_degree=6):
    weights = rng.random(max_degree) + 0.1
    return DegreeDistribution(np.arange(1, max_degree + 1), weights / weights.sum())


def random_supercritical(rng, max_degree=6, scale=0.5, min_nu=1.05):
    """A (p, r) pair with nu_r above ``min_nu``, redrawn until one is found."""
    while True:
        p = random_distribution(rng, max_degree)
        r = AlphaSequence.on(p, scale * rng.random(max_degree))
        if RemovalMoments.of(p, r).nu_r > min_nu:
            return p, r


def random_chain(rng, p, r, steps):
    """Apply ``steps`` random epsilon-transformations to r; returns the result and the transforms."""
    degrees = p.degrees.tolist()
    transforms = []
    for _ in range(steps):
        i, j = sorted(rng.choice(len(degrees), size=2, replace=False).tolist())
        k, l = degrees[i], degrees[j] - degrees[i]
        t = EpsilonTransform(k=k, l=l, eps=float(rng.uniform()) * transform_range(p, r, k, l))
        r = apply_epsilon_transform(p, r, t)
        transforms.append(t)
    return r, transforms


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
