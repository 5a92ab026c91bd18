"""European call pricing of the legal claim.

The expected litigation payoff is the underlying, the reasonable bargain
the strike, the economy's inflation rate the carry rate. The claim value
added to the strike gives the fair bargain, the upper end of the
cooperation-feasibility band [reasonable bargain, fair bargain]; both
band endpoints are treated as inclusive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DegenerateStrike, NonPositiveInput, UnpricedQuote, UnpriceableScenario
from .game_tree import reasonable_bargain
from .chain import evp
from .scenario import DisputeScenario

BELOW_REASONABLE = "BELOW_REASONABLE"
FEASIBLE = "FEASIBLE"
ABOVE_FAIR = "ABOVE_FAIR"

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class FairBargainQuote:
    evp: float          # underlying
    rb: float           # strike
    rate: float
    horizon: float
    sigma: float
    d1: float
    d2: float
    n_d1: float
    n_d2: float
    claim_value: float
    fair_bargain: float
    feasible_band: Tuple[float, float]
    settlement_at_offer: bool = False


def std_normal_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function.

    erfc is evaluated by the C library to within a few ulp, so the
    absolute error here is far below the documented 1e-10 bound.
    """
    return 0.5 * math.erfc(-x / _SQRT2)


def d1(evp_: float, rb: float, i: float, sigma: float, t: float) -> float:
    if evp_ <= 0.0 or rb <= 0.0 or sigma <= 0.0 or t <= 0.0:
        raise NonPositiveInput(
            f"need evp, rb, sigma, t all > 0; got evp={evp_}, rb={rb}, "
            f"sigma={sigma}, t={t}"
        )
    return (math.log(evp_ / rb) + (i + 0.5 * sigma * sigma) * t) / (sigma * math.sqrt(t))


def d2(d1_: float, sigma: float, t: float) -> float:
    return d1_ - sigma * math.sqrt(t)


def claim_value(evp_: float, rb: float, i: float, sigma: float, t: float) -> float:
    """N(d1)*EVP - N(d2)*RB*exp(-i*t)."""
    if rb <= 0.0:
        raise DegenerateStrike(f"strike rb={rb} <= 0; claim is effectively settled")
    x1 = d1(evp_, rb, i, sigma, t)
    x2 = d2(x1, sigma, t)
    return std_normal_cdf(x1) * evp_ - std_normal_cdf(x2) * rb * math.exp(-i * t)


def intrinsic_payoff(s_t: float, k: float) -> float:
    """max(s_t - k, 0)."""
    return max(s_t - k, 0.0)


def fair_bargain(s: DisputeScenario) -> FairBargainQuote:
    """Assemble the priced quote for a scenario.

    Raises UnpriceableScenario (with reason) when the strike, underlying,
    volatility or horizon is nonpositive; callers report the bargain
    analysis alone in that case.
    """
    rb = reasonable_bargain(s)
    underlying = evp(s)
    if rb <= 0.0:
        raise UnpriceableScenario("nonpositive-strike")
    if underlying <= 0.0:
        raise UnpriceableScenario("nonpositive-underlying")
    if s.volatility <= 0.0:
        raise UnpriceableScenario("nonpositive-volatility")
    if s.horizon_years <= 0.0:
        raise UnpriceableScenario("nonpositive-horizon")
    x1 = d1(underlying, rb, s.inflation_rate, s.volatility, s.horizon_years)
    x2 = d2(x1, s.volatility, s.horizon_years)
    n1 = std_normal_cdf(x1)
    n2 = std_normal_cdf(x2)
    q_value = n1 * underlying - n2 * rb * math.exp(-s.inflation_rate * s.horizon_years)
    fb = rb + q_value
    return FairBargainQuote(
        evp=underlying,
        rb=rb,
        rate=s.inflation_rate,
        horizon=s.horizon_years,
        sigma=s.volatility,
        d1=x1,
        d2=x2,
        n_d1=n1,
        n_d2=n2,
        claim_value=q_value,
        fair_bargain=fb,
        feasible_band=(rb, fb),
        settlement_at_offer=s.q_settle == 1.0,
    )


def classify_offer(offer: float, quote: Optional[FairBargainQuote]) -> str:
    """Place an incoming offer relative to the feasibility band (closed ends)."""
    if quote is None or quote.feasible_band is None:
        raise UnpricedQuote("no feasibility band on this quote")
    lo, hi = quote.feasible_band
    if offer < lo:
        return BELOW_REASONABLE
    if offer > hi:
        return ABOVE_FAIR
    return FEASIBLE
