"""Evaluation of series at the rational point r_prime, with its continuity modulus.

Substituting T = r_prime sends a finitely supported series to an exact
rational.  The map is a ring homomorphism, and on a norm-bounded set it
admits an explicit modulus of continuity: two series in budget c that
agree on every exponent up to N evaluate within
2*c*(r_prime/r)**N / (1 - r_prime/r) of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import LaurentSeries, RadiusParams, RationalLike, exact_fraction


def _evaluation_point(at: RadiusParams | RationalLike) -> Fraction:
    if isinstance(at, RadiusParams):
        return at.r_prime
    point = exact_fraction(at, "evaluation point")
    if not (0 < point < 1):
        raise ValueError(f"evaluation point must lie in (0, 1), got {point}")
    return point


def evaluate(f: LaurentSeries, at: RadiusParams | RationalLike) -> Fraction:
    """Sum of a_n * r_prime**n over the support of f, as an exact rational.

    Additive and multiplicative: evaluate(f + g) == evaluate(f) + evaluate(g)
    and evaluate(f * g) == evaluate(f) * evaluate(g).
    """
    point = _evaluation_point(at)
    return sum((a * point**n for n, a in f.items()), Fraction(0))


@dataclass(frozen=True)
class ContinuityBound:
    """Certified output gap for budgeted series agreeing up to an exponent.

    bound == 2*c*(r_prime/r)**N / (1 - r_prime/r), computed exactly.
    """

    agreement_order: int
    budget: Fraction
    params: RadiusParams
    bound: Fraction

    def __post_init__(self) -> None:
        ratio = self.params.r_prime / self.params.r
        expected = 2 * self.budget * ratio**self.agreement_order / (1 - ratio)
        if self.bound != expected:
            raise ValueError(f"bound {self.bound} does not match formula {expected}")


def continuity_bound(
    N: int, c: RationalLike, params: RadiusParams
) -> ContinuityBound:
    """Exact modulus 2*c*(r_prime/r)**N / (1 - r_prime/r) for agreement order N."""
    if not isinstance(N, int) or N < 0:
        raise ValueError(f"agreement order N must be a nonnegative integer, got {N}")
    c = exact_fraction(c, "budget c")
    if c <= 0:
        raise ValueError(f"budget c must be positive, got {c}")
    ratio = params.r_prime / params.r
    bound = 2 * c * ratio**N / (1 - ratio)
    return ContinuityBound(agreement_order=N, budget=c, params=params, bound=bound)
