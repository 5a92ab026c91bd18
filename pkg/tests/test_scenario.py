import io
import json

import pytest

from litiquant.errors import ParseError, ValidationError
from litiquant.scenario import (
    DisputeScenario,
    example_scenario,
    load_scenario,
    serialize_scenario,
)

VALID = {
    "winning_benefit": 10000, "settlement_benefit": 5000, "admin_cost": 1000,
    "bargain_cost": 500, "p_win": 0.6, "q_settle": 0.4, "p_appeal_win": 0.0,
    "filing_cost": 0, "inflation_rate": 0.019, "horizon_years": 0.3333,
    "volatility": 0.25, "currency": "USD",
}


def test_load_bundled_example():
    s = example_scenario()
    assert s.p_win == 0.6 and s.q_settle == 0.4
    assert s.winning_benefit == 10000.0 and s.settlement_benefit == 5000.0
    assert s.volatility == 0.25 and s.currency == "USD"


def test_load_from_stream_and_bytes():
    text = json.dumps(VALID)
    assert load_scenario(text) == load_scenario(text.encode())
    assert load_scenario(io.StringIO(text)) == load_scenario(text)


def test_round_trip_identity():
    s = load_scenario(json.dumps(VALID))
    assert load_scenario(serialize_scenario(s)) == s


def test_probability_out_of_range():
    bad = dict(VALID, p_win=1.3)
    with pytest.raises(ValidationError) as exc:
        load_scenario(json.dumps(bad))
    assert exc.value.field == "p_win"


def test_negative_money_rejected():
    bad = dict(VALID, admin_cost=-1)
    with pytest.raises(ValidationError) as exc:
        load_scenario(json.dumps(bad))
    assert exc.value.field == "admin_cost"


def test_unknown_field_rejected():
    bad = dict(VALID, court="SDNY")
    with pytest.raises(ValidationError) as exc:
        load_scenario(json.dumps(bad))
    assert exc.value.field == "court"


def test_missing_field_rejected():
    bad = dict(VALID)
    del bad["p_win"]
    with pytest.raises(ValidationError) as exc:
        load_scenario(json.dumps(bad))
    assert exc.value.field == "p_win"


def test_non_numeric_rejected():
    bad = dict(VALID, winning_benefit="lots")
    with pytest.raises(ValidationError):
        load_scenario(json.dumps(bad))
    bad = dict(VALID, p_win=True)
    with pytest.raises(ValidationError):
        load_scenario(json.dumps(bad))


def test_nan_rejected():
    with pytest.raises(ValidationError):
        DisputeScenario(**{**{k: float(v) for k, v in VALID.items() if k != "currency"},
                           "winning_benefit": float("nan")})


def test_empty_document():
    with pytest.raises(ParseError):
        load_scenario("")
    with pytest.raises(ParseError):
        load_scenario("   \n ")


def test_malformed_json_has_position():
    with pytest.raises(ParseError) as exc:
        load_scenario('{"winning_benefit": }')
    assert exc.value.line == 1 and exc.value.column is not None


def test_replace_revalidates():
    s = example_scenario()
    with pytest.raises(ValidationError):
        s.replace(q_settle=2.0)
