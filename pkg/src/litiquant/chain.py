"""Stochastic renegotiation chain: closed form, truncated recursion and a
seeded Monte Carlo simulator.

Each round either settles into another renegotiation (probability q) or
goes to trial, where the payoff is W_B with probability p and zero
otherwise. The infinite-chain expectation is exactly p*W_B (geometric
series); truncation at depth N applies a terminal rule.

The per-walk loop is the hot kernel: a compiled Cython extension is used
when available, with a vectorized numpy fallback selected at import
(override via LITIQUANT_CHAIN_BACKEND=python|cython). Both backends
consume identical pre-drawn uniforms, so estimates are bit-identical for
a fixed (config, seed) regardless of backend.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

FORCED_TRIAL = "FORCED_TRIAL"
ABANDON = "ABANDON"

_CHUNK = 1 << 17  # walks per RNG stream; part of the reproducibility contract

_backend_choice = os.environ.get("LITIQUANT_CHAIN_BACKEND", "").lower()
if _backend_choice == "python":
    from . import _chain_py as _kernel
    BACKEND = "python"
else:
    try:
        from . import _chain_kernel as _kernel  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        if _backend_choice == "cython":
            raise
        from . import _chain_py as _kernel
        BACKEND = "python"


@dataclass(frozen=True)
class ChainConfig:
    p_win: float
    q_settle: float
    winning_benefit: float
    max_rounds: int = 64
    terminal_rule: str = FORCED_TRIAL
    trials: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.p_win <= 1.0:
            raise ValidationError("p_win", "must be in [0, 1]")
        if not 0.0 <= self.q_settle < 1.0:
            raise ValidationError("q_settle", "must be in [0, 1) for simulation")
        if self.winning_benefit < 0.0:
            raise ValidationError("winning_benefit", "must be >= 0")
        if self.max_rounds < 0:
            raise ValidationError("max_rounds", "must be >= 0")
        if self.trials < 1:
            raise ValidationError("trials", "must be >= 1")
        if self.terminal_rule not in (FORCED_TRIAL, ABANDON):
            raise ValidationError("terminal_rule", f"unknown rule {self.terminal_rule!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValidationError("seed", "must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class ChainEstimate:
    closed_form: float
    truncated: float
    monte_carlo_mean: float
    monte_carlo_stderr: float
    rounds_histogram: dict = field(default_factory=dict)
    trials: int = 0
    seed: int = 0
    chunks: int = 1
    backend: str = BACKEND


def evp(s) -> float:
    """Expected litigation payoff: q*S_B + (1-q)*p*W_B.

    Convex combination of the settlement offer and the chain limit; the
    option-pricing underlying.
    """
    return s.q_settle * s.settlement_benefit + (
        1.0 - s.q_settle
    ) * s.p_win * s.winning_benefit


def chain_limit(p: float, w: float) -> float:
    """Infinite-chain expectation: sum_k q^k (1-q) p w = p*w."""
    return p * w


def chain_truncated(c: ChainConfig) -> float:
    """Recursion to depth max_rounds with the terminal rule applied.

    FORCED_TRIAL pins the terminal expectation at p*W_B, which propagates
    unchanged; ABANDON zeroes it, leaving p*W_B*(1 - q^(N+1)).
    """
    pw = c.p_win * c.winning_benefit
    if c.terminal_rule == FORCED_TRIAL:
        return pw
    return pw * (1.0 - c.q_settle ** (c.max_rounds + 1))


def simulate_chain(c: ChainConfig) -> ChainEstimate:
    """Seeded Monte Carlo over independent walks.

    Walks are processed in fixed-size chunks, each with its own RNG stream
    derived from (seed, chunk index), so the result is independent of how
    chunks are scheduled. Payoffs take only the values {0, W_B}, so the
    mean and standard error are exact functions of the win count.
    """
    depth = c.max_rounds + 1
    # thresholds[k] = q**(k+1); exit round = longest prefix with u < q**(k+1)
    thresholds = np.power(c.q_settle, np.arange(1, depth + 1, dtype=np.float64))
    forced = c.terminal_rule == FORCED_TRIAL

    wins = 0
    hist = np.zeros(depth + 1, dtype=np.int64)
    n_chunks = 0
    remaining = c.trials
    while remaining > 0:
        m = min(_CHUNK, remaining)
        rng = np.random.Generator(np.random.PCG64(
            np.random.SeedSequence([int(c.seed), n_chunks])))
        u = rng.random(m)
        v = rng.random(m)
        w, h = _kernel.walk_counts(u, v, thresholds, c.p_win, forced)
        wins += w
        hist += h
        n_chunks += 1
        remaining -= m

    n = c.trials
    wb = c.winning_benefit
    mean = wb * wins / n
    if n > 1 and 0 < wins < n and wb > 0.0:
        sample_var = (wb * wb * wins / n - mean * mean) * n / (n - 1)
        stderr = float(np.sqrt(max(sample_var, 0.0) / n))
    else:
        stderr = 0.0

    histogram = {k: int(hist[k]) for k in range(depth + 1) if hist[k] > 0}
    return ChainEstimate(
        closed_form=chain_limit(c.p_win, c.winning_benefit),
        truncated=chain_truncated(c),
        monte_carlo_mean=mean,
        monte_carlo_stderr=stderr,
        rounds_histogram=histogram,
        trials=n,
        seed=int(c.seed),
        chunks=n_chunks,
        backend=BACKEND,
    )
