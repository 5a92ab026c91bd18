"""Transaction-cost decomposition of the reasonable bargain and the optimal
transaction cost.

R_B splits into an expected-benefit component P_C and a transaction-cost
component L_C. With a utility over (R_B, L_C) combinations, the optimal
L_C* maximizes utility along the budget line R_B = P_C - L_C; the default
deterrence-weighted utility guarantees an interior optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateBudget, InfeasibleSplit, InvalidGrid
from .game_tree import reasonable_bargain
from .scenario import DisputeScenario

MAX_BARGAIN = "MAX_BARGAIN"
FEASIBLE = "FEASIBLE"
NO_BARGAIN = "NO_BARGAIN"

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_COARSE_POINTS = 64


@dataclass(frozen=True)
class CostDecomposition:
    pc: float   # expected-benefit component, (p*W_B + S_B)/2
    lc: float   # transaction-cost component, (C_a + 3*C_b)/2
    rb: float   # reasonable bargain, pc - lc


@dataclass(frozen=True)
class UtilitySpec:
    """Utility over (rb, lc) combinations.

    kind "deterrence_weighted" uses U(rb, lc) = rb * (1 - exp(-k*lc)) with
    k = deterrence_rate; kind "user_supplied" delegates to a deterministic
    evaluator(rb, lc) -> float.
    """

    kind: str = "deterrence_weighted"
    deterrence_rate: Optional[float] = None  # defaults to 1/pc at evaluation
    evaluator: Optional[Callable[[float, float], float]] = None

    def bind(self, pc: float) -> Callable[[float, float], float]:
        if self.kind == "user_supplied":
            if self.evaluator is None:
                raise ValueError("user_supplied utility needs an evaluator")
            return self.evaluator
        if self.kind != "deterrence_weighted":
            raise ValueError(f"unknown utility kind {self.kind!r}")
        k = self.deterrence_rate if self.deterrence_rate is not None else 1.0 / pc
        if k <= 0.0:
            raise ValueError("deterrence_rate must be > 0")
        return lambda rb, lc: rb * (1.0 - math.exp(-k * lc))


@dataclass(frozen=True)
class LcSweepPoint:
    lc: float
    rb: float
    utility: float


@dataclass(frozen=True)
class LcSweep:
    points: list[LcSweepPoint] = field(default_factory=list)


@dataclass(frozen=True)
class OptimalCost:
    lc_star: float
    rb_star: float
    utility_star: float


def decompose(s: DisputeScenario) -> CostDecomposition:
    pc = 0.5 * (s.p_win * s.winning_benefit + s.settlement_benefit)
    lc = 0.5 * (s.admin_cost + 3.0 * s.bargain_cost)
    return CostDecomposition(pc=pc, lc=lc, rb=pc - lc)


def classify_regime(d: CostDecomposition) -> str:
    if d.rb <= 0.0:
        return NO_BARGAIN
    if d.lc == 0.0:
        return MAX_BARGAIN
    return FEASIBLE


def sweep_lc(s: DisputeScenario, lo: float, hi: float, steps: int,
             utility: Optional[UtilitySpec] = None) -> LcSweep:
    """Evaluate rb and utility on an evenly spaced L_C grid in [lo, hi]."""
    if lo > hi or steps < 2:
        raise InvalidGrid(f"need lo <= hi and steps >= 2, got [{lo}, {hi}] x {steps}")
    if lo < 0.0:
        raise InvalidGrid("lo must be >= 0")
    d = decompose(s)
    if hi > d.pc:
        raise InvalidGrid(f"hi must be <= pc = {d.pc}")
    u = (utility or UtilitySpec()).bind(d.pc)
    points = []
    for lc in np.linspace(lo, hi, steps):
        lc = float(lc)
        rb = d.pc - lc
        points.append(LcSweepPoint(lc=lc, rb=rb, utility=u(rb, lc)))
    return LcSweep(points=points)


def optimal_lc(s: DisputeScenario, utility: Optional[UtilitySpec] = None,
               tol: Optional[float] = None) -> OptimalCost:
    """Maximize utility over lc in [0, pc] by golden-section search.

    A 64-point coarse scan seeds the bracket; the search is exact for
    unimodal utilities and degrades to the best grid region otherwise.
    The bracket is shrunk below tol, so the returned lc_star is within
    tol/2 of the bracketed maximizer.
    """
    d = decompose(s)
    if d.pc <= 0.0:
        raise DegenerateBudget(f"pc = {d.pc} <= 0")
    if tol is None:
        tol = 1e-6 * d.pc
    u = (utility or UtilitySpec()).bind(d.pc)

    def objective(lc):
        return u(d.pc - lc, lc)

    grid = np.linspace(0.0, d.pc, _COARSE_POINTS)
    values = [objective(float(x)) for x in grid]
    best = int(np.argmax(values))
    a = float(grid[max(best - 1, 0)])
    b = float(grid[min(best + 1, _COARSE_POINTS - 1)])

    c = b - _INV_GOLDEN * (b - a)
    e = a + _INV_GOLDEN * (b - a)
    fc, fe = objective(c), objective(e)
    while b - a > tol:
        if fc > fe:
            b, e, fe = e, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, e, fe
            e = a + _INV_GOLDEN * (b - a)
            fe = objective(e)
    lc_star = 0.5 * (a + b)
    return OptimalCost(lc_star=lc_star, rb_star=d.pc - lc_star,
                       utility_star=objective(lc_star))


def cost_split(lc_star: float, admin: Optional[float] = None,
               bargain: Optional[float] = None) -> dict:
    """Solve (ca + 3*cb)/2 = lc_star with one component fixed."""
    if lc_star < 0.0:
        raise InfeasibleSplit("lc_star must be >= 0")
    if (admin is None) == (bargain is None):
        raise ValueError("fix exactly one of admin or bargain")
    if admin is not None:
        cb = (2.0 * lc_star - admin) / 3.0
        if cb < 0.0:
            raise InfeasibleSplit(f"bargain cost would be {cb} < 0")
        return {"ca": admin, "cb": cb}
    ca = 2.0 * lc_star - 3.0 * bargain
    if ca < 0.0:
        raise InfeasibleSplit(f"admin cost would be {ca} < 0")
    return {"ca": ca, "cb": bargain}
