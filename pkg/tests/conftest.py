import numpy as np
import pytest

from litiquant.scenario import DisputeScenario, example_scenario


@pytest.fixture
def worked_example():
    """The bundled end-to-end scenario: p=0.6, q=0.4, W=10000, S=5000,
    Ca=1000, Cb=500, i=0.019, T=0.3333, sigma=0.25."""
    return example_scenario()


def random_scenarios(n, seed=0, priced_only=False):
    """Random valid scenarios for identity/property suites."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        s = DisputeScenario(
            winning_benefit=float(rng.uniform(0.0, 1e6)),
            settlement_benefit=float(rng.uniform(0.0, 1e6)),
            admin_cost=float(rng.uniform(0.0, 1e5)),
            bargain_cost=float(rng.uniform(0.0, 1e5)),
            p_win=float(rng.uniform(0.0, 1.0)),
            q_settle=float(rng.uniform(0.0, 1.0)),
            p_appeal_win=float(rng.uniform(0.0, 1.0)),
            filing_cost=float(rng.uniform(0.0, 1e4)),
            inflation_rate=float(rng.uniform(-0.02, 0.15)),
            horizon_years=float(rng.uniform(0.05, 10.0)),
            volatility=float(rng.uniform(0.01, 1.5)),
        )
        if priced_only:
            from litiquant import evp, reasonable_bargain
            if reasonable_bargain(s) <= 0.0 or evp(s) <= 0.0:
                continue
        out.append(s)
    return out
