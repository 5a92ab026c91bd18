"""litiquant command line interface.

Exit codes: 0 success, 1 validation/parse failure, 2 runtime failure.
"""

from __future__ import annotations

import functools
import os
import sys

import click

from . import analysis, chain, transaction_cost
from .errors import LitiquantError, ParseError, ValidationError
from .scenario import load_scenario

EXIT_INVALID = 1
EXIT_RUNTIME = 2


def _load(path):
    try:
        with open(path, "rb") as handle:
            return load_scenario(handle)
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_INVALID)


def _handle_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ParseError, ValidationError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)
        except LitiquantError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_RUNTIME)
    return wrapper


@click.group()
def main():
    """Settlement bargaining analysis: game tree, costs, chain and pricing."""


@main.command("analyze")
@click.argument("scenario_file", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "text", "csv"]),
              default="json", show_default=True)
@_handle_errors
def analyze_cmd(scenario_file, fmt):
    """Run the full analysis pipeline on one scenario."""
    report = analysis.analyze(_load(scenario_file))
    if fmt == "json":
        click.echo(analysis.canonical_report_json(report), nl=False)
    elif fmt == "csv":
        row = analysis._row_scalars(report)
        click.echo(",".join(row.keys()))
        click.echo(",".join("" if v is None else repr(v) for v in row.values()))
    else:
        click.echo(_format_text(report))


def _format_text(report):
    b = report.bargain
    cur = report.scenario.currency
    lines = [
        f"Expected value of trial (EVT):      {b.evt:,.2f} {cur}",
        f"Expected value of bargain (EVB):    {b.evb:,.2f} {cur}",
        f"Expected value of claim (EVC):      {b.evc:,.2f} {cur}",
        f"Threat value:                       {b.threat_value:,.2f} {cur}",
        f"Noncooperative bargain:             {b.noncoop_bargain:,.2f} {cur}",
        f"Cooperative bargain:                {b.coop_bargain:,.2f} {cur}",
        f"Cooperative surplus:                {b.coop_surplus:,.2f} {cur}",
        f"Reasonable bargain:                 {b.reasonable_bargain:,.2f} {cur}",
        f"Expected litigation payoff (EVP):   {report.evp:,.2f} {cur}",
    ]
    if report.quote is not None:
        q = report.quote
        lines += [
            f"Claim value (option):               {q.claim_value:,.2f} {cur}",
            f"Fair bargain:                       {q.fair_bargain:,.2f} {cur}",
            f"Feasible band:                      [{q.feasible_band[0]:,.2f}, "
            f"{q.feasible_band[1]:,.2f}] {cur}",
        ]
    else:
        lines.append(f"Quote:                              unpriceable "
                     f"({report.unpriceable_reason})")
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


@main.command("sweep")
@click.argument("scenario_file", type=click.Path())
@click.option("--param", required=True)
@click.option("--from", "lo", type=float, required=True)
@click.option("--to", "hi", type=float, required=True)
@click.option("--steps", type=int, required=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write CSV to a file instead of stdout.")
@_handle_errors
def sweep_cmd(scenario_file, param, lo, hi, steps, out):
    """Vary one parameter over a grid and tabulate derived outputs."""
    series = analysis.sweep(_load(scenario_file), param, lo, hi, steps)
    text = analysis.sweep_to_csv(series)
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


@main.command("simulate")
@click.argument("scenario_file", type=click.Path())
@click.option("--trials", type=int, default=100_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-rounds", type=int, default=64, show_default=True)
@click.option("--terminal", type=click.Choice(["forced-trial", "abandon"]),
              default="forced-trial", show_default=True)
@_handle_errors
def simulate_cmd(scenario_file, trials, seed, max_rounds, terminal):
    """Monte Carlo simulation of the renegotiation chain."""
    rule = chain.FORCED_TRIAL if terminal == "forced-trial" else chain.ABANDON
    estimate = analysis.run_simulation(
        _load(scenario_file), max_rounds=max_rounds, terminal_rule=rule,
        trials=trials, seed=seed,
    )
    import json
    click.echo(json.dumps(analysis.estimate_to_dict(estimate), indent=2))


@main.command("optimal-cost")
@click.argument("scenario_file", type=click.Path())
@click.option("--k", type=float, default=None,
              help="Deterrence rate of the default utility (default 1/pc).")
@click.option("--tol", type=float, default=None,
              help="Absolute tolerance on lc (default 1e-6 * pc).")
@_handle_errors
def optimal_cost_cmd(scenario_file, k, tol):
    """Find the utility-optimal transaction cost on [0, pc]."""
    utility = None
    if k is not None:
        utility = transaction_cost.UtilitySpec(deterrence_rate=k)
    result = transaction_cost.optimal_lc(_load(scenario_file), utility=utility, tol=tol)
    import json
    click.echo(json.dumps({
        "lc_star": result.lc_star,
        "rb_star": result.rb_star,
        "utility_star": result.utility_star,
    }, indent=2))


@main.command("serve")
@click.option("--port", type=int, default=None,
              help="Defaults to LITIQUANT_PORT or 8000.")
@click.option("--static-dir", type=click.Path(), default=None)
@click.option("--store-dir", type=click.Path(), default=None,
              help="Defaults to LITIQUANT_STORE_DIR or ./scenarios.")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve_cmd(port, static_dir, store_dir, host):
    """Run the HTTP service (and serve the UI if --static-dir is given)."""
    import uvicorn

    from .server import create_app

    if port is None:
        port = int(os.environ.get("LITIQUANT_PORT", "8000"))
    if store_dir is None:
        store_dir = os.environ.get("LITIQUANT_STORE_DIR", "./scenarios")
    if static_dir is not None and not os.path.isdir(static_dir):
        click.echo(f"error: static dir {static_dir} does not exist", err=True)
        sys.exit(EXIT_RUNTIME)
    try:
        app = create_app(store_dir, static_dir=static_dir)
    except OSError as exc:
        click.echo(f"error: store dir {store_dir} unusable: {exc}", err=True)
        sys.exit(EXIT_RUNTIME)
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except (OSError, SystemExit) as exc:
        click.echo(f"error: server failed to start: {exc}", err=True)
        sys.exit(EXIT_RUNTIME)


if __name__ == "__main__":
    main()
