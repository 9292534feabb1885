"""Finite truncation sets and the restriction maps between them.

Budgeted series with support in 0..m form a finite set: each coefficient
|a_n| is at most c * r^-n.  Dropping the top coefficient maps level m+1
onto level m, and the tower of these maps is an inverse system whose
levels we can enumerate and compare exactly.
"""

from fractions import Fraction

from laurentreal import (
    RadiusParams,
    count_truncations,
    enumerate_truncations,
    normalize_budget,
    restrict,
)

params = RadiusParams(Fraction(1, 2), Fraction(1, 10), c=1)

level1 = enumerate_truncations(1, params)
print("level 1 at r=1/2, c=1:", list(level1))
print("cardinality:", len(level1))

# Restriction recovers the lower level exactly (it is onto: extend by 0).
level0 = enumerate_truncations(0, params)
print("\nrestrict(level 1) == level 0:", restrict(level1).elements == level0.elements)

# Cardinalities grow with the degree; counting avoids materializing.
print("\ncounts by degree:", [count_truncations(m, params) for m in range(6)])

bigger = params.with_budget(2)
print("counts with c=2: ", [count_truncations(m, bigger) for m in range(6)])

# Budgets above 1 can be pushed below 1 by shifting: the smallest k with
# r^k * c < 1, paired with the rescaled parameters.
k, shifted = normalize_budget(params.with_budget(3))
print("\nnormalize c=3 at r=1/2: shift by", k, "-> c =", shifted.c)

# A tighter radius makes the levels explode in size; the enumerator counts
# a million-plus tuples in a couple of seconds and a cap guards anything
# beyond that.
fine = RadiusParams(Fraction(1, 10), Fraction(1, 100), c=1)
print("\ncount at r=1/10, c=1, m=3:", count_truncations(3, fine))
