"""Finite truncation sets, restriction maps, and budget normalization."""

import itertools
from fractions import Fraction

import pytest

from laurentreal import (
    CardinalityCapError,
    RadiusParams,
    count_truncations,
    enumerate_truncations,
    expand,
    normalize_budget,
    restrict,
)

HALF = Fraction(1, 2)


def params(r, c):
    return RadiusParams(r, r / 10, c=c)


def brute_force(m, p):
    """Independent oracle: scan the whole digit box, filter by the exact norm."""
    bounds = [int(p.c / p.r**n) for n in range(m + 1)]
    hits = []
    for tup in itertools.product(*[range(-b, b + 1) for b in bounds]):
        if sum(abs(a) * p.r**n for n, a in enumerate(tup)) <= p.c:
            hits.append(tup)
    return sorted(hits)


def test_degree_one_set_has_seven_elements():
    ts = enumerate_truncations(1, params(HALF, Fraction(1)))
    assert len(ts) == 7
    assert sorted(ts.elements) == [
        (-1, 0), (0, -2), (0, -1), (0, 0), (0, 1), (0, 2), (1, 0),
    ]


def test_degree_zero_set():
    ts = enumerate_truncations(0, params(HALF, Fraction(1)))
    assert ts.elements == ((-1,), (0,), (1,))


def test_tiny_budget_collapses_to_zero_tuple():
    ts = enumerate_truncations(3, params(HALF, Fraction(1, 1000)))
    assert ts.elements == ((0, 0, 0, 0),)


@pytest.mark.parametrize(
    "m,r,c",
    [
        (0, HALF, Fraction(1)),
        (1, HALF, Fraction(1)),
        (2, HALF, Fraction(2)),
        (1, Fraction(1, 3), Fraction(3, 2)),
        (2, Fraction(2, 3), Fraction(1)),
    ],
)
def test_enumeration_matches_brute_force(m, r, c):
    p = params(r, c)
    assert list(enumerate_truncations(m, p).elements) == brute_force(m, p)


def test_elements_are_lexicographically_sorted():
    ts = enumerate_truncations(2, params(HALF, Fraction(2)))
    assert list(ts.elements) == sorted(ts.elements)


def test_digit_ranges_certified():
    p = params(HALF, Fraction(2))
    for tup in enumerate_truncations(3, p):
        for n, a in enumerate(tup):
            assert abs(a) <= int(p.c / p.r**n)


def test_validate_accepts_enumerated_sets():
    enumerate_truncations(2, params(HALF, Fraction(1))).validate()


def test_count_matches_enumeration():
    for m in range(4):
        p = params(HALF, Fraction(2))
        assert count_truncations(m, p) == len(enumerate_truncations(m, p))


def test_cap_is_enforced():
    with pytest.raises(CardinalityCapError):
        enumerate_truncations(1, params(HALF, Fraction(1)), cap=5)
    with pytest.raises(CardinalityCapError):
        count_truncations(8, params(Fraction(9, 10), Fraction(50)), cap=10**4)


def test_enumerate_requires_budget():
    with pytest.raises(ValueError):
        enumerate_truncations(1, RadiusParams(HALF, Fraction(1, 10)))
    with pytest.raises(ValueError):
        enumerate_truncations(-1, params(HALF, Fraction(1)))


# --- restriction maps


def test_restrict_recovers_lower_level():
    p = params(HALF, Fraction(1))
    assert restrict(enumerate_truncations(1, p)).elements == enumerate_truncations(0, p).elements


def test_restrict_singleton_zero():
    p = params(HALF, Fraction(1, 1000))
    assert restrict(enumerate_truncations(2, p)).elements == ((0, 0),)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_restriction_containment(m):
    p = params(HALF, Fraction(3, 2))
    upper = set(t[:-1] for t in enumerate_truncations(m + 1, p))
    lower = set(enumerate_truncations(m, p).elements)
    assert upper <= lower


@pytest.mark.parametrize("m", [0, 1, 2])
def test_restriction_surjective_via_zero_extension(m):
    p = params(HALF, Fraction(3, 2))
    upper = enumerate_truncations(m + 1, p)
    for tup in enumerate_truncations(m, p):
        assert tup + (0,) in upper
    assert restrict(upper).elements == enumerate_truncations(m, p).elements


def test_restrictions_compose():
    p = params(HALF, Fraction(2))
    level3 = enumerate_truncations(3, p)
    double_drop = tuple(sorted(set(t[:-2] for t in level3.elements)))
    assert restrict(restrict(level3)).elements == double_drop


def test_cardinality_monotone_in_degree():
    p = params(HALF, Fraction(2))
    sizes = [len(enumerate_truncations(m, p)) for m in range(5)]
    assert sizes == sorted(sizes)


def test_restrict_below_zero_rejected():
    with pytest.raises(ValueError):
        restrict(enumerate_truncations(0, params(HALF, Fraction(1))))


def test_expansion_certificates_appear_in_truncation_sets():
    p = RadiusParams(HALF, Fraction(1, 10), c=Fraction(8))
    ts = enumerate_truncations(3, p)
    for numerator in (1, 9, 55, 3141, -271, 9999):
        cert = expand(Fraction(numerator, 10**3), p, 10)
        if not cert.digits:
            continue
        exps = [n for n, _ in cert.digits]
        if min(exps) < 0 or max(exps) > 3:
            continue
        coeffs = dict(cert.digits)
        tup = tuple(coeffs.get(n, 0) for n in range(4))
        if sum(abs(a) * p.r**n for n, a in enumerate(tup)) <= p.c:
            assert tup in ts


# --- budget normalization


def test_normalize_budget_shifts_three_twice():
    k, shifted = normalize_budget(params(HALF, Fraction(3)))
    assert k == 2
    assert shifted.c == Fraction(3, 4)


def test_normalize_budget_no_op_below_one():
    k, shifted = normalize_budget(params(HALF, Fraction(1, 2)))
    assert k == 0
    assert shifted.c == Fraction(1, 2)


def test_normalize_budget_at_one_tenth():
    # 50 * (1/10)**2 = 1/2 is the first product below 1
    k, shifted = normalize_budget(params(Fraction(1, 10), Fraction(50)))
    assert k == 2
    assert shifted.c == Fraction(1, 2)


def test_normalize_budget_minimality():
    for c in (Fraction(3), Fraction(50), Fraction(999, 7)):
        p = params(HALF, c)
        k, shifted = normalize_budget(p)
        assert shifted.c < 1
        if k:
            assert p.r ** (k - 1) * c >= 1


def test_normalize_budget_requires_budget():
    with pytest.raises(ValueError):
        normalize_budget(RadiusParams(HALF, Fraction(1, 10)))
