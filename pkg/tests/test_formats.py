"""Wire formats: series text, series JSON, rationals, certificate JSON."""

from fractions import Fraction

import pytest
from hypothesis import given

from laurentreal import LaurentSeries, RadiusParams, expand
from laurentreal import formats

from conftest import rationals, series

PARAMS = RadiusParams(Fraction(1, 2), Fraction(1, 10))


def test_rational_format():
    assert formats.format_rational(Fraction(0)) == "0/1"
    assert formats.format_rational(Fraction(-3, 7)) == "-3/7"


def test_rational_parse():
    assert formats.parse_rational("314159/100000") == Fraction(314159, 100000)
    assert formats.parse_rational(" 5 ") == 5
    with pytest.raises(ValueError):
        formats.parse_rational("three halves")
    with pytest.raises(ValueError):
        formats.parse_rational("1/0")


@given(q=rationals)
def test_rational_round_trip(q):
    assert formats.parse_rational(formats.format_rational(q)) == q


def test_series_text_blank_is_zero():
    assert formats.parse_series_text("") == LaurentSeries.zero()
    assert formats.parse_series_text("\n  \n") == LaurentSeries.zero()


def test_series_text_round_trip_example():
    f = LaurentSeries({-2: 3, 0: -1, 1: 10})
    text = formats.format_series_text(f)
    assert text == "-2 3\n0 -1\n1 10\n"
    assert formats.parse_series_text(text) == f


@given(f=series)
def test_series_text_round_trip(f):
    assert formats.parse_series_text(formats.format_series_text(f)) == f


def test_series_text_rejects_malformed_lines():
    with pytest.raises(ValueError):
        formats.parse_series_text("0 1 2\n")
    with pytest.raises(ValueError):
        formats.parse_series_text("0 1.5\n")
    with pytest.raises(ValueError):
        formats.parse_series_text("0 1\n0 2\n")  # duplicate exponent is ambiguous
    with pytest.raises(ValueError):
        formats.parse_series_text("0 x\n")


def test_series_text_accepts_any_exponent_order():
    assert formats.parse_series_text("1 10\n0 -1\n") == LaurentSeries({0: -1, 1: 10})


def test_series_json_preserves_big_coefficients():
    big = 10**40 + 7
    f = LaurentSeries({-1: -big, 3: big})
    data = formats.series_to_json_dict(f)
    assert data == {"terms": [[-1, str(-big)], [3, str(big)]]}
    assert formats.series_from_json_dict(data) == f


def test_series_json_rejects_malformed():
    with pytest.raises(ValueError):
        formats.series_from_json_dict({"trems": []})
    with pytest.raises(ValueError):
        formats.series_from_json_dict({"terms": [[0]]})


def test_certificate_wire_format_is_exactly_five_keys():
    cert = expand(Fraction(314159, 100000), PARAMS, 40)
    data = formats.certificate_to_json_dict(cert)
    assert set(data) == {"x", "r", "r_prime", "digits", "residual"}
    assert data["digits"] == [[0, 3], [1, 1], [2, 4], [3, 1], [4, 5], [5, 9]]
    assert data["residual"] == "0/1"


@given(x=rationals)
def test_certificate_round_trip(x):
    cert = expand(x, PARAMS, 20)
    data = formats.certificate_to_json_dict(cert)
    assert formats.certificate_from_json_dict(data) == cert


def test_certificate_tampering_rejected():
    cert = expand(Fraction(1, 3), PARAMS, 6)
    data = formats.certificate_to_json_dict(cert)
    data["digits"][0] = [1, 99]
    with pytest.raises(ValueError):
        formats.certificate_from_json_dict(data)


def test_format_decimal_exact_and_truncated():
    assert formats.format_decimal(Fraction(157, 50), 4) == ("3.1400", True)
    assert formats.format_decimal(Fraction(1, 3), 4) == ("0.3333", False)
    assert formats.format_decimal(Fraction(-1, 8), 3) == ("-0.125", True)
    assert formats.format_decimal(Fraction(5), 0) == ("5", True)
