"""Dispute scenario definition, validation and JSON (de)serialization.

A scenario document is a single flat JSON object whose keys are exactly the
field names below (snake_case), money in major currency units, plus an
optional "currency" label carried through to reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from importlib import resources

from .errors import ParseError, ValidationError

_PROBABILITY_FIELDS = ("p_win", "q_settle", "p_appeal_win")
_NONNEGATIVE_MONEY_FIELDS = (
    "winning_benefit",
    "settlement_benefit",
    "admin_cost",
    "bargain_cost",
    "filing_cost",
)


@dataclass(frozen=True)
class DisputeScenario:
    """Full parameter set of one dispute.

    Payoffs and costs are money amounts in ``currency``; probabilities are
    plain fractions; ``inflation_rate`` and ``volatility`` are annualized
    rates and ``horizon_years`` the anticipated litigation duration.
    """

    winning_benefit: float      # judgment payoff if plaintiff wins at trial
    settlement_benefit: float   # defendant's settlement offer payoff
    admin_cost: float           # per-trial administrative cost
    bargain_cost: float         # per-negotiation bargaining/discovery cost
    p_win: float                # plaintiff's probability of winning at trial
    q_settle: float             # probability a negotiation stage settles
    p_appeal_win: float = 0.0   # probability of winning on appeal
    filing_cost: float = 0.0
    inflation_rate: float = 0.0
    horizon_years: float = 1.0
    volatility: float = 0.0
    currency: str = "USD"

    def __post_init__(self):
        for name in _PROBABILITY_FIELDS:
            value = getattr(self, name)
            _require_finite(name, value)
            if not 0.0 <= value <= 1.0:
                raise ValidationError(name, f"must be in [0, 1], got {value}")
        for name in _NONNEGATIVE_MONEY_FIELDS:
            value = getattr(self, name)
            _require_finite(name, value)
            if value < 0.0:
                raise ValidationError(name, f"must be >= 0, got {value}")
        _require_finite("inflation_rate", self.inflation_rate)
        _require_finite("horizon_years", self.horizon_years)
        _require_finite("volatility", self.volatility)
        if self.horizon_years < 0.0:
            raise ValidationError("horizon_years", "must be >= 0")
        if self.volatility < 0.0:
            raise ValidationError("volatility", "must be >= 0")
        if not isinstance(self.currency, str) or not self.currency:
            raise ValidationError("currency", "must be a non-empty string")

    def replace(self, **changes) -> "DisputeScenario":
        data = self.to_dict()
        data.update(changes)
        return DisputeScenario(**data)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict) -> "DisputeScenario":
        if not isinstance(data, dict):
            raise ValidationError("<document>", "scenario must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValidationError(unknown[0], "unknown field")
        required = known - {
            "p_appeal_win", "filing_cost", "inflation_rate",
            "horizon_years", "volatility", "currency",
        }
        missing = sorted(required - set(data))
        if missing:
            raise ValidationError(missing[0], "missing required field")
        coerced = {}
        for key, value in data.items():
            if key == "currency":
                coerced[key] = value
                continue
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(key, f"must be a number, got {value!r}")
            coerced[key] = float(value)
        return cls(**coerced)


def _require_finite(name, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError(name, f"must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ValidationError(name, f"must be finite, got {value}")


def load_scenario(source) -> DisputeScenario:
    """Parse and validate a scenario from bytes, text or a readable stream.

    Raises ParseError for malformed documents (with line/column where
    available) and ValidationError for field-level constraint violations.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from exc
    if not source or not source.strip():
        raise ParseError("empty scenario document")
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), line=exc.lineno, column=exc.colno) from exc
    return DisputeScenario.from_dict(data)


def serialize_scenario(s: DisputeScenario) -> str:
    """Canonical scenario JSON; load_scenario(serialize_scenario(s)) == s."""
    return json.dumps(s.to_dict(), indent=2) + "\n"


def example_scenario() -> DisputeScenario:
    """The bundled worked-example scenario shipped with the package."""
    text = resources.files("litiquant.data").joinpath("paper_example.json").read_text()
    return load_scenario(text)
