"""Exception hierarchy shared across the package."""


class LitiquantError(Exception):
    """Base class for all domain errors."""


class ParseError(LitiquantError):
    """Scenario document is not well-formed (bad JSON, empty input)."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(LitiquantError):
    """A scenario field violates its constraint."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.detail = message


class InvalidGrid(LitiquantError):
    """Bad grid bounds or step count for a transaction-cost sweep."""


class DegenerateBudget(LitiquantError):
    """Expected-benefit component is nonpositive; no cost budget to optimize over."""


class InfeasibleSplit(LitiquantError):
    """Requested cost split would force a negative cost component."""


class InvalidSweep(LitiquantError):
    """Unknown sweep parameter or a range leaving the valid scenario domain."""


class NonPositiveInput(LitiquantError):
    """Option pricing input (underlying, strike, volatility or horizon) is <= 0."""


class DegenerateStrike(NonPositiveInput):
    """Strike (reasonable bargain) is <= 0; the claim cannot be priced."""


class UnpriceableScenario(LitiquantError):
    """Scenario cannot be priced; carries a machine-readable reason."""

    def __init__(self, reason):
        super().__init__(f"scenario cannot be priced: {reason}")
        self.reason = reason


class UnpricedQuote(LitiquantError):
    """Offer classification requested against a quote without a feasibility band."""
