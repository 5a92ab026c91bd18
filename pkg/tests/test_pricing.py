import math

import mpmath
import numpy as np
import pytest

from litiquant import pricing
from litiquant.errors import (
    DegenerateStrike,
    NonPositiveInput,
    UnpricedQuote,
    UnpriceableScenario,
)

from conftest import random_scenarios

mpmath.mp.dps = 30


class TestStdNormalCdf:
    def test_zero(self):
        assert pricing.std_normal_cdf(0.0) == 0.5

    def test_table_values(self):
        assert pricing.std_normal_cdf(2.03) == pytest.approx(0.9788, abs=1e-4)
        assert pricing.std_normal_cdf(1.88) == pytest.approx(0.9699, abs=1e-4)

    def test_against_mpmath_grid(self):
        xs = np.linspace(-8.0, 8.0, 2001)
        for x in xs:
            ref = float(mpmath.ncdf(float(x)))
            assert abs(pricing.std_normal_cdf(float(x)) - ref) <= 1e-10

    def test_symmetry(self):
        for x in np.linspace(-10.0, 10.0, 401):
            total = pricing.std_normal_cdf(float(x)) + pricing.std_normal_cdf(float(-x))
            assert abs(total - 1.0) <= 1e-12

    def test_strict_monotonicity(self):
        # beyond |x| ~ 7.5 consecutive grid values collide at double resolution
        xs = np.linspace(-7.0, 7.0, 5000)
        values = [pricing.std_normal_cdf(float(x)) for x in xs]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestD1D2:
    def test_worked_example(self):
        x1 = pricing.d1(5600.0, 4250.0, 0.019, 0.25, 0.3333)
        assert x1 == pytest.approx(2.02695, abs=5e-4)
        x2 = pricing.d2(x1, 0.25, 0.3333)
        assert x2 == pytest.approx(1.88262, abs=5e-4)
        assert x2 == x1 - 0.25 * math.sqrt(0.3333)

    def test_at_the_money(self):
        assert pricing.d1(100.0, 100.0, 0.0, 0.2, 1.0) == pytest.approx(0.1, rel=1e-12)

    def test_large_sigma_asymptote(self):
        assert pricing.d1(100.0, 100.0, 0.0, 50.0, 1.0) > 10.0

    def test_d2_simple(self):
        assert pricing.d2(0.1, 0.1, 1.0) == pytest.approx(0.0, abs=1e-15)

    def test_nonpositive_inputs(self):
        for bad in [(0.0, 1, 0, 1, 1), (1, 0.0, 0, 1, 1), (1, 1, 0, 0.0, 1),
                    (1, 1, 0, 1, 0.0), (-5, 1, 0, 1, 1)]:
            with pytest.raises(NonPositiveInput):
                pricing.d1(*bad)


class TestClaimValue:
    def test_worked_example(self):
        q = pricing.claim_value(5600.0, 4250.0, 0.019, 0.25, 0.3333)
        assert q == pytest.approx(1383.5, abs=0.5)
        assert q == pytest.approx(1385.23, abs=5.0)

    def test_sigma_to_zero_intrinsic_limit(self):
        expected = 5600.0 - 4250.0 * math.exp(-0.019 * 0.3333)
        q = pricing.claim_value(5600.0, 4250.0, 0.019, 1e-8, 0.3333)
        assert q == pytest.approx(expected, rel=1e-9)

    def test_underlying_to_zero(self):
        q = pricing.claim_value(1e-12, 4250.0, 0.019, 0.25, 0.3333)
        assert q == pytest.approx(0.0, abs=1e-9)

    def test_degenerate_strike(self):
        with pytest.raises(DegenerateStrike):
            pricing.claim_value(5600.0, 0.0, 0.019, 0.25, 0.3333)
        with pytest.raises(DegenerateStrike):
            pricing.claim_value(5600.0, -10.0, 0.019, 0.25, 0.3333)


class TestIntrinsicPayoff:
    def test_cases(self):
        assert pricing.intrinsic_payoff(5600.0, 4250.0) == 1350.0
        assert pricing.intrinsic_payoff(4250.0, 4250.0) == 0.0
        assert pricing.intrinsic_payoff(1000.0, 4250.0) == 0.0


class TestFairBargain:
    def test_worked_example(self, worked_example):
        quote = pricing.fair_bargain(worked_example)
        assert quote.evp == 5600.0
        assert quote.rb == 4250.0
        assert quote.fair_bargain == pytest.approx(5635.0, abs=5.0)
        assert quote.fair_bargain == quote.rb + quote.claim_value
        assert quote.feasible_band == (quote.rb, quote.fair_bargain)
        assert quote.n_d2 <= quote.n_d1
        assert not quote.settlement_at_offer

    def test_q_one_flags_settlement_at_offer(self, worked_example):
        quote = pricing.fair_bargain(worked_example.replace(q_settle=1.0))
        assert quote.evp == worked_example.settlement_benefit
        assert quote.settlement_at_offer

    def test_sigma_to_zero_limit(self, worked_example):
        quote = pricing.fair_bargain(worked_example.replace(volatility=1e-8))
        expected = quote.rb + (quote.evp - quote.rb * math.exp(
            -worked_example.inflation_rate * worked_example.horizon_years))
        assert quote.fair_bargain == pytest.approx(expected, rel=1e-9)

    def test_unpriceable_reasons(self, worked_example):
        with pytest.raises(UnpriceableScenario) as exc:
            pricing.fair_bargain(worked_example.replace(admin_cost=50000.0))
        assert exc.value.reason == "nonpositive-strike"
        with pytest.raises(UnpriceableScenario) as exc:
            pricing.fair_bargain(worked_example.replace(volatility=0.0))
        assert exc.value.reason == "nonpositive-volatility"
        with pytest.raises(UnpriceableScenario) as exc:
            pricing.fair_bargain(worked_example.replace(horizon_years=0.0))
        assert exc.value.reason == "nonpositive-horizon"


class TestClassifyOffer:
    def test_band(self, worked_example):
        quote = pricing.fair_bargain(worked_example)
        assert pricing.classify_offer(5000.0, quote) == pricing.FEASIBLE
        assert pricing.classify_offer(quote.rb, quote) == pricing.FEASIBLE
        assert pricing.classify_offer(quote.fair_bargain, quote) == pricing.FEASIBLE
        assert pricing.classify_offer(100.0, quote) == pricing.BELOW_REASONABLE
        assert pricing.classify_offer(1e9, quote) == pricing.ABOVE_FAIR

    def test_unpriced(self):
        with pytest.raises(UnpricedQuote):
            pricing.classify_offer(100.0, None)


class TestPricingProperties:
    def test_no_arbitrage_bounds(self):
        for s in random_scenarios(1000, seed=21, priced_only=True):
            quote = pricing.fair_bargain(s)
            lower = max(quote.evp - quote.rb * math.exp(-quote.rate * quote.horizon), 0.0)
            eps = 1e-9 * max(quote.evp, 1.0)
            assert quote.claim_value >= lower - eps
            assert quote.claim_value <= quote.evp + eps
            assert quote.fair_bargain >= quote.rb

    def test_monotonicity_in_sigma_and_underlying_and_strike(self):
        for s in random_scenarios(200, seed=23, priced_only=True):
            quote = pricing.fair_bargain(s)
            up_sigma = pricing.fair_bargain(s.replace(volatility=s.volatility * 1.5))
            assert up_sigma.claim_value >= quote.claim_value - 1e-9
            base = pricing.claim_value(quote.evp, quote.rb, quote.rate,
                                       quote.sigma, quote.horizon)
            up_underlying = pricing.claim_value(quote.evp * 1.1, quote.rb, quote.rate,
                                                quote.sigma, quote.horizon)
            up_strike = pricing.claim_value(quote.evp, quote.rb * 1.1, quote.rate,
                                            quote.sigma, quote.horizon)
            assert up_underlying >= base - 1e-9
            assert up_strike <= base + 1e-9

    def test_put_call_parity(self):
        for s in random_scenarios(500, seed=27, priced_only=True):
            quote = pricing.fair_bargain(s)
            discounted_strike = quote.rb * math.exp(-quote.rate * quote.horizon)
            put = (discounted_strike * pricing.std_normal_cdf(-quote.d2)
                   - quote.evp * pricing.std_normal_cdf(-quote.d1))
            lhs = quote.claim_value - put
            rhs = quote.evp - discounted_strike
            assert abs(lhs - rhs) <= 1e-9 * max(abs(rhs), quote.evp, 1.0)
