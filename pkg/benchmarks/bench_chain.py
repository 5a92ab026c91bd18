#!/usr/bin/env python3
"""Benchmark the compiled chain kernel against the numpy fallback and
verify both produce identical counts."""

import time

import numpy as np

from litiquant import _chain_py

try:
    from litiquant import _chain_kernel
except ImportError:
    _chain_kernel = None

TRIALS = 5_000_000
P_WIN = 0.6
Q = 0.4
DEPTH = 65


def run(kernel, u, v, thresholds):
    start = time.perf_counter()
    wins, hist = kernel.walk_counts(u, v, thresholds, P_WIN, True)
    return time.perf_counter() - start, wins, hist


def main():
    rng = np.random.default_rng(0)
    u = rng.random(TRIALS)
    v = rng.random(TRIALS)
    thresholds = np.power(Q, np.arange(1, DEPTH + 1, dtype=np.float64))

    t_py, wins_py, hist_py = run(_chain_py, u, v, thresholds)
    print(f"python/numpy fallback: {TRIALS} walks in {t_py:.3f}s "
          f"({TRIALS / t_py / 1e6:.1f} M walks/s)")

    if _chain_kernel is None:
        print("cython kernel not built; skipping comparison")
        return

    t_cy, wins_cy, hist_cy = run(_chain_kernel, u, v, thresholds)
    print(f"cython kernel:         {TRIALS} walks in {t_cy:.3f}s "
          f"({TRIALS / t_cy / 1e6:.1f} M walks/s)")
    print(f"speedup: {t_py / t_cy:.2f}x")

    assert wins_py == wins_cy
    assert np.array_equal(np.asarray(hist_py), np.asarray(hist_cy))
    print("results identical across backends")


if __name__ == "__main__":
    main()
