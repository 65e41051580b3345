"""
Splittable seeding: every random stream of a run derives from one root seed.
"""

from typing import List

import numpy as np


def spawn_seeds(root_seed: int, count: int) -> List[int]:
    """
    Derive `count` independent 64-bit seeds from a root seed.

    Child i depends only on (root_seed, i), so adding days never changes the
    streams of existing ones.
    """
    children = np.random.SeedSequence(root_seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def derive_seed(root_seed: int, *keys: int) -> int:
    """A single 64-bit seed for the stream addressed by `keys` under `root_seed`."""
    sequence = np.random.SeedSequence(root_seed, spawn_key=tuple(keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
