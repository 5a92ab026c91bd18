"""Vectorized numpy fallback for the chain walk kernel.

Must stay bit-identical to _chain_kernel.walk_counts: both reduce to the
same comparisons u < q**(k+1) and v < p on the same pre-drawn uniforms.
"""

from __future__ import annotations

import numpy as np


def walk_counts(u, v, thresholds, p_win, forced_trial):
    depth = thresholds.shape[0]
    # exit round = #(j : u < thresholds[j]); thresholds are strictly
    # decreasing so count elements greater than u via searchsorted on the
    # ascending reversal.
    ascending = thresholds[::-1]
    exit_round = depth - np.searchsorted(ascending, u, side="right")
    hist = np.bincount(exit_round, minlength=depth + 1).astype(np.int64)
    goes_to_trial = (exit_round < depth) if not forced_trial else np.ones_like(u, dtype=bool)
    wins = int(np.count_nonzero(goes_to_trial & (v < p_win)))
    return wins, hist
