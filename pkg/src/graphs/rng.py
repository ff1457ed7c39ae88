"""
Counter-based random streams.

Each (seed, n_index, replica, purpose) tuple gets its own Philox stream, so a replica
draws the same numbers regardless of which worker runs it or in what order.
"""

import numpy as np

PURPOSES = {
    "degrees": 0,
    "matching": 1,
    "removal": 2,
    "centrality": 3,
    "probe": 4,
    "local_limit": 5,
}


def stream(seed: int, purpose: str, n_index: int = 0, replica: int = 0) -> np.random.Generator:
    key = np.random.SeedSequence([int(seed), int(n_index), int(replica), PURPOSES[purpose]])
    return np.random.Generator(np.random.Philox(key))


def as_generator(seed, purpose: str) -> np.random.Generator:
    """Pass a Generator through unchanged; turn an integer seed into the purpose's stream."""
    if isinstance(seed, np.random.Generator):
        return seed
    return stream(seed, purpose)
