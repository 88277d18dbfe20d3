"""Named random substreams derived from a single run seed.

Every source of randomness in a run is a separate substream keyed by a
stage name plus optional integer indices (iteration, pair index, ...).
Consuming one stream never shifts the draws of another, so toggling a
pipeline stage or changing the worker count leaves all other stages'
randomness untouched.
"""

from __future__ import annotations

import numpy as np

# Stable stream ids; appending is fine, renumbering would break reproducibility.
_STREAMS = {
    "split": 1,
    "schedule": 2,
    "mixup-lambda": 3,
    "ssmba-mask": 4,
    "anchor": 5,
    "partner": 6,
}


def substream(seed: int, name: str, *indices: int) -> np.random.Generator:
    """Return the generator for stream ``name`` (+ indices) under ``seed``."""
    try:
        stream_id = _STREAMS[name]
    except KeyError:
        raise KeyError(f"unknown random stream {name!r}") from None
    key = (stream_id,) + tuple(int(i) for i in indices)
    return np.random.default_rng(np.random.SeedSequence(entropy=int(seed), spawn_key=key))
