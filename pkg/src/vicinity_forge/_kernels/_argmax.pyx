# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: fused dot-product argmax over a candidate matrix.

Single pass per query, no (n_queries x n_candidates) similarity matrix is
materialised.  Tie handling must stay identical to the numpy fallback:
strict ``>`` keeps the first (lowest) candidate index.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def argmax_dot(const double[:, ::1] queries,
               const double[:, ::1] candidates,
               const cnp.uint8_t[::1] valid,
               const cnp.int64_t[:, ::1] exclude):
    """For each query row, index of the valid candidate row maximising the
    dot product, skipping per-query excluded indices; -1 if no candidate.

    ``exclude`` has shape (n_queries, 2) with -1 meaning "no exclusion".
    """
    cdef Py_ssize_t nq = queries.shape[0]
    cdef Py_ssize_t d = queries.shape[1]
    cdef Py_ssize_t nv = candidates.shape[0]
    cdef cnp.ndarray out = np.empty(nq, dtype=np.int64)
    cdef cnp.int64_t[::1] out_v = out
    cdef Py_ssize_t i, v, k, best_idx
    cdef cnp.int64_t e0, e1
    cdef double best, s

    if candidates.shape[1] != d:
        raise ValueError("query/candidate dimension mismatch")

    for i in range(nq):
        e0 = exclude[i, 0]
        e1 = exclude[i, 1]
        best_idx = -1
        best = 0.0
        for v in range(nv):
            if not valid[v] or v == e0 or v == e1:
                continue
            s = 0.0
            for k in range(d):
                s += queries[i, k] * candidates[v, k]
            if best_idx < 0 or s > best:
                best = s
                best_idx = v
        out_v[i] = best_idx
    return out
