"""litiquant: settlement bargaining analytics.

Backward-induction expected values of the litigation game tree,
transaction-cost decomposition and optimization, the stochastic
renegotiation chain, and option-style fair-bargain pricing, exposed as a
library, CLI and HTTP service.
"""

from .analysis import AnalysisReport, SweepSeries, analyze, run_simulation, sweep
from .chain import (
    ABANDON,
    FORCED_TRIAL,
    ChainConfig,
    ChainEstimate,
    chain_limit,
    chain_truncated,
    evp,
    simulate_chain,
)
from .game_tree import (
    BargainAnalysis,
    analyze_bargain,
    coop_bargain,
    coop_surplus,
    expected_value_appeal,
    expected_value_bargain,
    expected_value_claim,
    expected_value_trial,
    filing_viability,
    noncoop_bargain,
    reasonable_bargain,
    threat_value,
)
from .pricing import (
    FairBargainQuote,
    claim_value,
    classify_offer,
    d1,
    d2,
    fair_bargain,
    intrinsic_payoff,
    std_normal_cdf,
)
from .scenario import DisputeScenario, example_scenario, load_scenario, serialize_scenario
from .transaction_cost import (
    CostDecomposition,
    UtilitySpec,
    classify_regime,
    cost_split,
    decompose,
    optimal_lc,
    sweep_lc,
)

__version__ = "0.1.0"
