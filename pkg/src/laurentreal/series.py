"""Finitely supported integral Laurent series and their exact arithmetic.

Series are maps from integer exponents (possibly negative) to nonzero
integer coefficients.  All norms and distances are exact rationals;
floating point never enters this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

RationalLike = Union[Fraction, int, str]


def exact_fraction(value: RationalLike, what: str = "value") -> Fraction:
    """Coerce to an exact Fraction, rejecting floats outright.

    Floats are refused rather than converted: Fraction(0.1) is exact but
    almost never the rational the caller meant.
    """
    if isinstance(value, float):
        raise TypeError(f"{what} must be an exact rational, got float {value!r}")
    return Fraction(value)


class LaurentSeries:
    """An integral Laurent series with finite support.

    Stored as an exponent -> coefficient map with no zero coefficients,
    so two series are equal exactly when their maps are equal.  Instances
    are immutable; all operations return new series.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[int, int] = {}
        for exponent, coefficient in items:
            if not isinstance(exponent, int) or isinstance(exponent, bool):
                raise TypeError(f"exponent must be an integer, got {exponent!r}")
            if not isinstance(coefficient, int) or isinstance(coefficient, bool):
                raise TypeError(f"coefficient must be an integer, got {coefficient!r}")
            if coefficient:
                store[exponent] = store.get(exponent, 0) + coefficient
                if not store[exponent]:
                    del store[exponent]
        self._coeffs = store

    @classmethod
    def term(cls, coefficient: int, exponent: int = 0) -> LaurentSeries:
        """The single-term series coefficient * T**exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls) -> LaurentSeries:
        return cls()

    @classmethod
    def one(cls) -> LaurentSeries:
        return cls({0: 1})

    def coefficient(self, exponent: int) -> int:
        """Coefficient of T**exponent (0 when absent)."""
        return self._coeffs.get(exponent, 0)

    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, ascending."""
        return tuple(sorted(self._coeffs))

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> LaurentSeries:
        out = LaurentSeries()
        out._coeffs = {n: -a for n, a in self._coeffs.items()}
        return out

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        merged = dict(self._coeffs)
        for n, a in other._coeffs.items():
            s = merged.get(n, 0) + a
            if s:
                merged[n] = s
            elif n in merged:
                del merged[n]
        out = LaurentSeries()
        out._coeffs = merged
        return out

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: LaurentSeries) -> LaurentSeries:
        """Cauchy product; exact, support bounds add."""
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        acc: dict[int, int] = {}
        for n1, a1 in self._coeffs.items():
            for n2, a2 in other._coeffs.items():
                k = n1 + n2
                s = acc.get(k, 0) + a1 * a2
                if s:
                    acc[k] = s
                elif k in acc:
                    del acc[k]
        out = LaurentSeries()
        out._coeffs = acc
        return out

    def __pow__(self, exponent: int) -> LaurentSeries:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = LaurentSeries.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by T**k: translate every exponent by k.

        Scales the weighted norm exactly: r_norm(shift(f, k), r) equals
        r**k * r_norm(f, r).
        """
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("shift amount must be an integer")
        out = LaurentSeries()
        out._coeffs = {n + k: a for n, a in self._coeffs.items()}
        return out

    def r_norm(self, r: RationalLike) -> Fraction:
        """Weighted coefficient norm: sum of |a_n| * r**n, exact.

        Requires 0 < r < 1.
        """
        r = exact_fraction(r, "radius r")
        if not (0 < r < 1):
            raise ValueError(f"radius r must lie in (0, 1), got {r}")
        return sum((abs(a) * r**n for n, a in self._coeffs.items()), Fraction(0))

    def t_valuation(self) -> int | float:
        """Least exponent with nonzero coefficient; +infinity for the zero series."""
        if not self._coeffs:
            return math.inf
        return min(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for n, a in sorted(self._coeffs.items()):
            if n == 0:
                term = str(a)
            elif n == 1:
                term = f"{a}*T"
            else:
                term = f"{a}*T^{n}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"


@dataclass(frozen=True)
class RadiusParams:
    """The radius pair fixing the ring and the evaluation point.

    Requires 0 < r_prime < r < 1 strictly, and c > 0 when a norm budget
    is given.  Accepts ints, Fractions, or "p/q" strings; floats are
    rejected.
    """

    r: Fraction
    r_prime: Fraction
    c: Fraction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", exact_fraction(self.r, "r"))
        object.__setattr__(self, "r_prime", exact_fraction(self.r_prime, "r_prime"))
        if self.c is not None:
            object.__setattr__(self, "c", exact_fraction(self.c, "c"))
        if not (0 < self.r_prime < self.r < 1):
            raise ValueError(
                f"need 0 < r_prime < r < 1, got r_prime={self.r_prime}, r={self.r}"
            )
        if self.c is not None and self.c <= 0:
            raise ValueError(f"norm budget c must be positive, got {self.c}")

    def with_budget(self, c: RationalLike) -> RadiusParams:
        return RadiusParams(self.r, self.r_prime, exact_fraction(c, "c"))


@dataclass(frozen=True)
class TAdicParams:
    """Base delta of the T-adic ultrametric; a free parameter in (0, 1)."""

    delta: Fraction = Fraction(1, 2)

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", exact_fraction(self.delta, "delta"))
        if not (0 < self.delta < 1):
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")


def t_adic_distance(
    f: LaurentSeries, g: LaurentSeries, params: TAdicParams | None = None
) -> Fraction:
    """Ultrametric distance delta ** t_valuation(f - g); zero when f == g."""
    if params is None:
        params = TAdicParams()
    diff = f - g
    if not diff:
        return Fraction(0)
    return params.delta ** diff.t_valuation()


def in_budget(f: LaurentSeries, params: RadiusParams) -> bool:
    """Whether the weighted norm of f stays within the budget c (boundary included)."""
    if params.c is None:
        raise ValueError("in_budget requires params with a norm budget c")
    return f.r_norm(params.r) <= params.c


ZERO = LaurentSeries.zero()
ONE = LaurentSeries.one()
