"""Backward-induction expected values of the litigation game tree.

Working back from appeal through trial, bargain and claim gives the threat
value of the plaintiff's position; the noncooperative and cooperative
bargain positions are its q=0 / q=1 boundaries and the reasonable bargain
splits the surplus between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scenario import DisputeScenario


@dataclass(frozen=True)
class FilingViability:
    threat_value: float
    filing_cost: float
    viable: bool


@dataclass(frozen=True)
class BargainAnalysis:
    """Every backward-induction and bargain quantity derived from a scenario."""

    eva: float
    evt: float
    evb: float
    evc: float
    threat_value: float
    noncoop_bargain: float
    coop_bargain: float
    coop_surplus: float
    reasonable_bargain: float
    filing_viable: bool


def expected_value_appeal(s: DisputeScenario) -> float:
    """d*W_B - C_a. Standalone: the appeal branch does not feed the claim value."""
    return s.p_appeal_win * s.winning_benefit - s.admin_cost


def expected_value_trial(s: DisputeScenario) -> float:
    """p*W_B - C_a; may be negative."""
    return s.p_win * s.winning_benefit - s.admin_cost


def expected_value_bargain(s: DisputeScenario) -> float:
    """(1-q)*(p*W_B - C_a) + q*S_B - C_b."""
    q = s.q_settle
    return (1.0 - q) * expected_value_trial(s) + q * s.settlement_benefit - s.bargain_cost


def expected_value_claim(s: DisputeScenario) -> float:
    """Expanded polynomial form of the claim value.

    Equals (1-q)*EVB + q*S_B - C_b algebraically; the identity is enforced
    by tests at 1e-12 relative tolerance.
    """
    p, q = s.p_win, s.q_settle
    return (
        s.winning_benefit * (p - 2.0 * p * q + p * q * q)
        + s.admin_cost * (-1.0 + 2.0 * q - q * q)
        + s.settlement_benefit * (2.0 * q - q * q)
        + s.bargain_cost * (-2.0 + q)
    )


def threat_value(s: DisputeScenario) -> float:
    """Factored form of the claim value: the minimum go-it-alone payoff."""
    p, q = s.p_win, s.q_settle
    one_minus_q_sq = (1.0 - q) * (1.0 - q)
    return (
        s.winning_benefit * p * one_minus_q_sq
        - s.admin_cost * one_minus_q_sq
        + s.settlement_benefit * q * (2.0 - q)
        - s.bargain_cost * (2.0 - q)
    )


def noncoop_bargain(s: DisputeScenario) -> float:
    """Threat value with no chance of settlement (q=0): p*W_B - C_a - 2*C_b."""
    return s.p_win * s.winning_benefit - s.admin_cost - 2.0 * s.bargain_cost


def coop_bargain(s: DisputeScenario) -> float:
    """Bargain position under certain settlement (q=1): S_B - C_b."""
    return s.settlement_benefit - s.bargain_cost


def coop_surplus(s: DisputeScenario) -> float:
    """B_N - B_C; negative means settlement already dominates."""
    return (
        s.p_win * s.winning_benefit
        - s.settlement_benefit
        - s.admin_cost
        - s.bargain_cost
    )


def reasonable_bargain(s: DisputeScenario) -> float:
    """Midpoint bargain position: (p*W_B + S_B)/2 - (C_a + 3*C_b)/2."""
    return 0.5 * (s.p_win * s.winning_benefit + s.settlement_benefit) - 0.5 * (
        s.admin_cost + 3.0 * s.bargain_cost
    )


def filing_viability(s: DisputeScenario) -> FilingViability:
    """Filing is viable iff the threat value covers the filing cost (inclusive)."""
    tv = threat_value(s)
    return FilingViability(
        threat_value=tv, filing_cost=s.filing_cost, viable=tv >= s.filing_cost
    )


def analyze_bargain(s: DisputeScenario) -> BargainAnalysis:
    return BargainAnalysis(
        eva=expected_value_appeal(s),
        evt=expected_value_trial(s),
        evb=expected_value_bargain(s),
        evc=expected_value_claim(s),
        threat_value=threat_value(s),
        noncoop_bargain=noncoop_bargain(s),
        coop_bargain=coop_bargain(s),
        coop_surplus=coop_surplus(s),
        reasonable_bargain=reasonable_bargain(s),
        filing_viable=filing_viability(s).viable,
    )
