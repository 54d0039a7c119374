"""Reproducible random streams

Every random stream is a numpy PCG64 generator seeded from
`SeedSequence(entropy=master_seed, spawn_key=keys)`. The keys are small non-negative integers:
a sweep derives per-trial seeds with the trial's seed index as the only key, and a trial derives
its protocol streams with a `Stream` id. Streams that differ in any key are independent, and the
same keys always rebuild the same stream on any platform numpy supports.
"""

from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    """Spawn keys of the random streams used inside one trial"""

    placement = 1
    regions = 2
    coordinates = 3
    beams = 4


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """PCG64 generator for the stream named by `keys` under `seed`"""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(k) for k in keys))
    return np.random.Generator(np.random.PCG64(sequence))


def derive_seed(master: int, *keys: int) -> int:
    """64-bit sub-seed for the given keys, e.g. the trial seed of sweep index `i`"""
    sequence = np.random.SeedSequence(
        entropy=master, spawn_key=tuple(int(k) for k in keys)
    )
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
