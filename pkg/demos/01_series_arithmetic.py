"""Exact Laurent series arithmetic, weighted norms, and the T-adic metric.

Everything below is computed with arbitrary-precision integers and exact
rationals; no floating point anywhere.
"""

from fractions import Fraction

from laurentreal import LaurentSeries, RadiusParams, TAdicParams, in_budget, t_adic_distance

# A series is a finite map from exponents (negative allowed) to integers.
f = LaurentSeries({-1: 1, 0: 2})     # T^-1 + 2
g = LaurentSeries({1: 5})            # 5T
print("f       =", f)
print("g       =", g)
print("f + g   =", f + g)
print("f * g   =", f * g)
print("f - f   =", f - f, "(empty support)")

# Multiplying by a power of T shifts support and scales the weighted norm
# by exactly the same power of the radius.
r = Fraction(1, 2)
h = LaurentSeries({0: -1, 1: 10})    # the base-10 kernel generator, norm 6 at r = 1/2
print("\nh               =", h)
print("|h|_r           =", h.r_norm(r))
print("|T^3 h|_r       =", h.shift(3).r_norm(r), "= (1/2)^3 * 6")

# Norm budgets are closed conditions: the boundary is included.
params = RadiusParams(r, Fraction(1, 10), c=6)
print("h within budget 6:", in_budget(h, params))
print("h within budget 5:", in_budget(h, params.with_budget(5)))

# The T-adic distance only sees the first exponent where two series differ.
a = LaurentSeries({0: 1, 1: 1})
b = LaurentSeries({0: 1, 1: 1, 5: 1})
print("\nd(a, b) =", t_adic_distance(a, b, TAdicParams(Fraction(1, 2))), "= (1/2)^5")
print("d(a, a) =", t_adic_distance(a, a))

# Valuations add under products, which is why nonzero series never
# multiply to zero.
print("\nvaluation of f      =", f.t_valuation())
print("valuation of g      =", g.t_valuation())
print("valuation of f * g  =", (f * g).t_valuation())
