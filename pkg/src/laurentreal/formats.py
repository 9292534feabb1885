"""Text and JSON wire formats for series, rationals, and expansion certificates.

Series text format: one term per line, "<exponent> <coefficient>" in
decimal with exponents strictly increasing; a blank file is the zero
series.  The JSON alternative is {"terms": [[n, "a_n"], ...]} with
coefficients as decimal strings so arbitrary precision survives JSON.
Rationals are serialized as "p/q".
"""

from __future__ import annotations

from fractions import Fraction

from .expansion import ExpansionCertificate, min_exponent
from .series import LaurentSeries, RadiusParams


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a plain integer) into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_series_text(f: LaurentSeries) -> str:
    """Series text format; empty string for the zero series."""
    return "".join(f"{n} {a}\n" for n, a in f.items())


def parse_series_text(text: str) -> LaurentSeries:
    """Parse the series text format.

    Lines may arrive in any exponent order (canonical output is ascending),
    but a repeated exponent is ambiguous and rejected.
    """
    terms: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<exponent> <coefficient>', got {raw!r}")
        try:
            exponent, coefficient = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from exc
        if exponent in terms:
            raise ValueError(f"line {lineno}: duplicate exponent {exponent}")
        terms[exponent] = coefficient
    return LaurentSeries(terms)


def series_to_json_dict(f: LaurentSeries) -> dict:
    return {"terms": [[n, str(a)] for n, a in f.items()]}


def series_from_json_dict(data: dict) -> LaurentSeries:
    if not isinstance(data, dict) or "terms" not in data:
        raise ValueError("series JSON must be an object with a 'terms' array")
    terms = []
    for entry in data["terms"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError(f"malformed term {entry!r}")
        n, a = entry
        terms.append((int(n), int(a)))
    return LaurentSeries(terms)


def certificate_to_json_dict(cert: ExpansionCertificate) -> dict:
    """The fixed five-key certificate wire format."""
    return {
        "x": format_rational(cert.target),
        "r": format_rational(cert.params.r),
        "r_prime": format_rational(cert.params.r_prime),
        "digits": [[n, a] for n, a in cert.digits],
        "residual": format_rational(cert.residual),
    }


def certificate_from_json_dict(data: dict) -> ExpansionCertificate:
    """Rebuild a certificate from its wire format, re-deriving the bound fields.

    Reconstruction re-runs the certificate invariants, so a tampered
    digit list or residual is rejected.
    """
    params = RadiusParams(parse_rational(data["r"]), parse_rational(data["r_prime"]))
    digits = tuple((int(n), int(a)) for n, a in data["digits"])
    rp = params.r_prime
    target = parse_rational(data["x"])
    floor = min_exponent(target, rp) if target != 0 else None
    digit_bound = 1 + 1 / rp
    if floor is None:
        norm_budget = Fraction(0)
    else:
        norm_budget = digit_bound * params.r**floor / (1 - params.r)
    return ExpansionCertificate(
        target=target,
        params=params,
        digits=digits,
        residual=parse_rational(data["residual"]),
        digit_bound=digit_bound,
        norm_budget=norm_budget,
        exponent_floor=floor,
    )


def format_decimal(
    q: Fraction, digits: int
) -> tuple[str, bool]:
    """Decimal rendering of q to the requested fractional digits.

    Returns (text, exact); exact is True when the decimal terminates
    within the requested digits, otherwise the text is truncated toward
    zero.
    """
    if digits < 0:
        raise ValueError("digit count must be nonnegative")
    sign = "-" if q < 0 else ""
    scaled = abs(q) * 10**digits
    integer_part = int(scaled)  # truncation toward zero
    exact = integer_part == scaled
    text = str(integer_part).rjust(digits + 1, "0")
    if digits:
        text = f"{text[:-digits]}.{text[-digits:]}"
    return sign + text, exact
