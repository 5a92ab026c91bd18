# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernel for the renegotiation-chain simulator.

Consumes pre-drawn uniforms so results are bit-identical to the
pure-python fallback in _chain_py.
"""

import numpy as np


def walk_counts(double[::1] u, double[::1] v, double[::1] thresholds,
                double p_win, bint forced_trial):
    """Count trial wins and per-round exits for one chunk of walks.

    thresholds[k] = q**(k+1), strictly decreasing; a walk with uniform
    u[i] exits at round k = #(j : u[i] < thresholds[j]); k == len(thresholds)
    means the truncation depth was exceeded.
    """
    cdef Py_ssize_t m = u.shape[0]
    cdef Py_ssize_t depth = thresholds.shape[0]
    hist_arr = np.zeros(depth + 1, dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    cdef long long wins = 0
    cdef Py_ssize_t i, k
    for i in range(m):
        k = 0
        while k < depth and u[i] < thresholds[k]:
            k += 1
        hist[k] += 1
        if k < depth or forced_trial:
            if v[i] < p_win:
                wins += 1
    return wins, hist_arr
