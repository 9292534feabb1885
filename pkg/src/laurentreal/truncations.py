"""Finite truncation sets of budgeted series and their restriction maps.

The degree-m truncation set collects all coefficient tuples
(a_0, ..., a_m) with sum of |a_n| * r**n at most c.  Each coordinate is
bounded by floor(c * r**-n), so the sets are finite, and dropping the
last coordinate maps the level-(m+1) set onto the level-m set.  The
chain of these restriction maps is the inverse system whose limit is the
full budgeted space; here it is materialized exactly, at desk scale.

Enumeration works over cleared denominators: with r = p/q and c = u/v the
budget condition becomes an integer inequality
sum |a_n| * v * p**n * q**(m-n) <= u * q**m, which keeps the inner loops
in plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import RadiusParams

DEFAULT_CAP = 10**7


class CardinalityCapError(RuntimeError):
    """Enumeration would exceed the configured cardinality cap."""

    def __init__(self, m: int, params: RadiusParams, cap: int):
        super().__init__(
            f"truncation set at degree {m} with r={params.r}, c={params.c} "
            f"exceeds the cardinality cap {cap}; raise the cap to proceed"
        )
        self.cap = cap


@dataclass(frozen=True)
class TruncationSet:
    """All degree-m coefficient tuples within the norm budget, lex ordered."""

    m: int
    params: RadiusParams
    elements: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, tup) -> bool:
        return tuple(tup) in set(self.elements)

    def validate(self) -> None:
        """Re-check every stored tuple against the exact norm bound."""
        r, c = self.params.r, self.params.c
        assert c is not None
        for tup in self.elements:
            if len(tup) != self.m + 1:
                raise ValueError(f"tuple {tup} has wrong length for degree {self.m}")
            norm = sum(abs(a) * r**n for n, a in enumerate(tup))
            if norm > c:
                raise ValueError(f"tuple {tup} has norm {norm} above budget {c}")


def _integer_weights(m: int, params: RadiusParams) -> tuple[list[int], int]:
    # clears denominators: condition sum |a_n|*w[n] <= budget, all integers
    p, q = params.r.numerator, params.r.denominator
    assert params.c is not None
    u, v = params.c.numerator, params.c.denominator
    weights = [v * p**n * q ** (m - n) for n in range(m + 1)]
    return weights, u * q**m


def enumerate_truncations(
    m: int, params: RadiusParams, cap: int = DEFAULT_CAP
) -> TruncationSet:
    """Exhaustively enumerate the degree-m truncation set in lexicographic order.

    Digit ranges shrink with the budget remaining after each prefix, so
    only admissible tuples are ever produced.  Raises CardinalityCapError
    once more than cap tuples have been generated.
    """
    _check_enumeration_args(m, params)
    weights, budget = _integer_weights(m, params)
    out: list[tuple[int, ...]] = []

    def descend(prefix: tuple[int, ...], level: int, remaining: int) -> None:
        bound = remaining // weights[level]
        if level == m:
            out.extend(prefix + (d,) for d in range(-bound, bound + 1))
            if len(out) > cap:
                raise CardinalityCapError(m, params, cap)
            return
        w = weights[level]
        for d in range(-bound, bound + 1):
            descend(prefix + (d,), level + 1, remaining - abs(d) * w)

    descend((), 0, budget)
    return TruncationSet(m=m, params=params, elements=tuple(out))


def count_truncations(m: int, params: RadiusParams, cap: int = DEFAULT_CAP) -> int:
    """Cardinality of the degree-m truncation set, without materializing it."""
    _check_enumeration_args(m, params)
    weights, budget = _integer_weights(m, params)

    def descend(level: int, remaining: int) -> int:
        bound = remaining // weights[level]
        if level == m:
            return 2 * bound + 1
        w = weights[level]
        # d and -d leave the same remaining budget, so count each subtree once
        total = descend(level + 1, remaining)
        for d in range(1, bound + 1):
            total += 2 * descend(level + 1, remaining - d * w)
            if total > cap:
                raise CardinalityCapError(m, params, cap)
        return total

    total = descend(0, budget)
    if total > cap:
        raise CardinalityCapError(m, params, cap)
    return total


def _check_enumeration_args(m: int, params: RadiusParams) -> None:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"degree m must be a nonnegative integer, got {m}")
    if params.c is None:
        raise ValueError("enumeration requires params with a norm budget c")


def restrict(truncations: TruncationSet) -> TruncationSet:
    """Drop the top coordinate of every tuple: the map from level m to m-1.

    Dropping a nonnegative-exponent term cannot increase the norm, so the
    image lands inside the lower truncation set; it is in fact all of it,
    since any lower tuple extends by a zero coordinate.
    """
    if truncations.m < 1:
        raise ValueError("cannot restrict below degree 0")
    reduced = sorted(set(tup[:-1] for tup in truncations.elements))
    return TruncationSet(
        m=truncations.m - 1, params=truncations.params, elements=tuple(reduced)
    )


def normalize_budget(params: RadiusParams) -> tuple[int, RadiusParams]:
    """Smallest k >= 0 with r**k * c < 1, plus the shifted parameters.

    Shifting by T**k carries budget c into budget r**k * c exactly, so
    this reduces any budget to the sub-unit regime.
    """
    if params.c is None:
        raise ValueError("normalize_budget requires params with a norm budget c")
    k = 0
    scaled = params.c
    while scaled >= 1:
        scaled *= params.r
        k += 1
    return k, params.with_budget(scaled)
