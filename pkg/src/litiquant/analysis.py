"""Composed analysis pipeline, canonical report serialization, parameter
sweeps and simulation pass-through."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import chain, game_tree, pricing, transaction_cost
from .errors import InvalidSweep, UnpriceableScenario, ValidationError
from .scenario import DisputeScenario

SWEEPABLE_PARAMS = (
    "p_win",
    "q_settle",
    "winning_benefit",
    "settlement_benefit",
    "admin_cost",
    "bargain_cost",
    "volatility",
    "horizon_years",
    "inflation_rate",
)

_MONEY_DECIMALS = 6


@dataclass(frozen=True)
class AnalysisReport:
    scenario: DisputeScenario
    bargain: game_tree.BargainAnalysis
    decomposition: transaction_cost.CostDecomposition
    evp: float
    quote: Optional[pricing.FairBargainQuote]
    unpriceable_reason: Optional[str]
    warnings: list = field(default_factory=list)


@dataclass(frozen=True)
class SweepSeries:
    swept_param: str
    grid: list
    rows: list  # one dict of report scalars per grid point

    COLUMNS = (
        "evc", "threat_value", "noncoop_bargain", "coop_bargain",
        "reasonable_bargain", "evp", "claim_value", "fair_bargain",
    )


def analyze(s: DisputeScenario) -> AnalysisReport:
    """Run every module against one scenario.

    Never raises on economically degenerate inputs: degeneracy becomes
    warnings and an absent (unpriceable) quote.
    """
    bargain = game_tree.analyze_bargain(s)
    decomposition = transaction_cost.decompose(s)
    underlying = chain.evp(s)

    warnings = []
    if bargain.coop_surplus < 0.0:
        warnings.append("negative cooperative surplus: settlement already dominates")
    if bargain.reasonable_bargain <= 0.0:
        warnings.append("no reasonable bargain: transaction costs exhaust the expected benefit")
    if s.q_settle == 1.0:
        warnings.append("settlement at offer: q=1 ends the game at the settlement node")
    if not bargain.filing_viable:
        warnings.append("filing not viable: threat value below filing cost")

    quote = None
    reason = None
    try:
        quote = pricing.fair_bargain(s)
    except UnpriceableScenario as exc:
        reason = exc.reason
        warnings.append(f"unpriceable scenario: {exc.reason}")
    return AnalysisReport(
        scenario=s,
        bargain=bargain,
        decomposition=decomposition,
        evp=underlying,
        quote=quote,
        unpriceable_reason=reason,
        warnings=warnings,
    )


def _money(x: float) -> float:
    return round(x, _MONEY_DECIMALS)


def report_to_dict(report: AnalysisReport) -> dict:
    """Canonical report structure: fixed field order, money rounded to six
    decimals for display, full-precision values in the "_exact" block."""
    b = report.bargain
    d = report.decomposition
    q = report.quote

    bargain_block = {
        "eva": _money(b.eva),
        "evt": _money(b.evt),
        "evb": _money(b.evb),
        "evc": _money(b.evc),
        "threat_value": _money(b.threat_value),
        "noncoop_bargain": _money(b.noncoop_bargain),
        "coop_bargain": _money(b.coop_bargain),
        "coop_surplus": _money(b.coop_surplus),
        "reasonable_bargain": _money(b.reasonable_bargain),
        "filing_viable": b.filing_viable,
    }
    decomposition_block = {
        "pc": _money(d.pc),
        "lc": _money(d.lc),
        "rb": _money(d.rb),
        "regime": transaction_cost.classify_regime(d),
    }
    if q is not None:
        quote_block = {
            "evp": _money(q.evp),
            "rb": _money(q.rb),
            "rate": q.rate,
            "horizon": q.horizon,
            "sigma": q.sigma,
            "d1": q.d1,
            "d2": q.d2,
            "n_d1": q.n_d1,
            "n_d2": q.n_d2,
            "claim_value": _money(q.claim_value),
            "fair_bargain": _money(q.fair_bargain),
            "feasible_band": [_money(q.feasible_band[0]), _money(q.feasible_band[1])],
            "settlement_at_offer": q.settlement_at_offer,
        }
    else:
        quote_block = {"unpriceable": report.unpriceable_reason}

    exact = {
        "bargain": {k: getattr(b, k) for k in (
            "eva", "evt", "evb", "evc", "threat_value", "noncoop_bargain",
            "coop_bargain", "coop_surplus", "reasonable_bargain")},
        "decomposition": {"pc": d.pc, "lc": d.lc, "rb": d.rb},
        "evp": report.evp,
    }
    if q is not None:
        exact["quote"] = {
            "claim_value": q.claim_value,
            "fair_bargain": q.fair_bargain,
        }

    return {
        "scenario": report.scenario.to_dict(),
        "currency": report.scenario.currency,
        "bargain": bargain_block,
        "decomposition": decomposition_block,
        "evp": _money(report.evp),
        "quote": quote_block,
        "warnings": list(report.warnings),
        "_exact": exact,
    }


def canonical_report_json(report: AnalysisReport) -> str:
    """Byte-stable serialization shared by the CLI and the HTTP service."""
    return json.dumps(report_to_dict(report), indent=2, allow_nan=False) + "\n"


def _row_scalars(report: AnalysisReport) -> dict:
    q = report.quote
    return {
        "evc": report.bargain.evc,
        "threat_value": report.bargain.threat_value,
        "noncoop_bargain": report.bargain.noncoop_bargain,
        "coop_bargain": report.bargain.coop_bargain,
        "reasonable_bargain": report.bargain.reasonable_bargain,
        "evp": report.evp,
        "claim_value": q.claim_value if q is not None else None,
        "fair_bargain": q.fair_bargain if q is not None else None,
    }


def sweep(s: DisputeScenario, param: str, lo: float, hi: float, steps: int) -> SweepSeries:
    """Vary one scenario parameter over an even grid and analyze each point."""
    if param not in SWEEPABLE_PARAMS:
        raise InvalidSweep(f"unknown parameter {param!r}")
    if not lo < hi:
        raise InvalidSweep(f"need lo < hi, got [{lo}, {hi}]")
    if steps < 2:
        raise InvalidSweep(f"need steps >= 2, got {steps}")
    grid = [float(x) for x in np.linspace(lo, hi, steps)]
    rows = []
    for value in grid:
        try:
            point = s.replace(**{param: value})
        except ValidationError as exc:
            raise InvalidSweep(
                f"grid point {param}={value} leaves the valid domain: {exc}"
            ) from exc
        rows.append(_row_scalars(analyze(point)))
    return SweepSeries(swept_param=param, grid=grid, rows=rows)


def sweep_to_csv(series: SweepSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([series.swept_param, *SweepSeries.COLUMNS])
    for value, row in zip(series.grid, series.rows):
        writer.writerow([value] + [
            "" if row[c] is None else repr(row[c]) for c in SweepSeries.COLUMNS
        ])
    return buf.getvalue()


def sweep_to_dict(series: SweepSeries) -> dict:
    return {
        "swept_param": series.swept_param,
        "grid": series.grid,
        "columns": list(SweepSeries.COLUMNS),
        "rows": series.rows,
    }


def run_simulation(s: DisputeScenario, max_rounds: int = 64,
                   terminal_rule: str = chain.FORCED_TRIAL,
                   trials: int = 100_000, seed: int = 0) -> chain.ChainEstimate:
    """Simulate the renegotiation chain with the scenario's p, q and W_B."""
    cfg = chain.ChainConfig(
        p_win=s.p_win,
        q_settle=s.q_settle,
        winning_benefit=s.winning_benefit,
        max_rounds=max_rounds,
        terminal_rule=terminal_rule,
        trials=trials,
        seed=seed,
    )
    return chain.simulate_chain(cfg)


def estimate_to_dict(est: chain.ChainEstimate) -> dict:
    return {
        "closed_form": est.closed_form,
        "truncated": est.truncated,
        "monte_carlo_mean": est.monte_carlo_mean,
        "monte_carlo_stderr": est.monte_carlo_stderr,
        "rounds_histogram": {str(k): v for k, v in est.rounds_histogram.items()},
        "trials": est.trials,
        "seed": est.seed,
        "chunks": est.chunks,
        "backend": est.backend,
    }
