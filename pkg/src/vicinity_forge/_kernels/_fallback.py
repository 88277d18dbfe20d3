"""Pure numpy implementation of the decode kernel.

Semantically identical to the compiled version: ``np.argmax`` returns the
first occurrence of the maximum, matching the strict ``>`` loop there.
"""

from __future__ import annotations

import numpy as np


def argmax_dot(
    queries: np.ndarray,
    candidates: np.ndarray,
    valid: np.ndarray,
    exclude: np.ndarray,
) -> np.ndarray:
    """Vectorised counterpart of the compiled ``argmax_dot``."""
    if candidates.shape[1] != queries.shape[1]:
        raise ValueError("query/candidate dimension mismatch")
    sims = queries @ candidates.T
    sims[:, ~valid.astype(bool)] = -np.inf
    rows = np.arange(sims.shape[0])
    for col in range(exclude.shape[1]):
        excl = exclude[:, col]
        hit = excl >= 0
        sims[rows[hit], excl[hit]] = -np.inf
    out = sims.argmax(axis=1).astype(np.int64)
    out[~np.isfinite(sims.max(axis=1))] = -1
    return out
