"""The kernel of evaluation at 1/10: one generator, two membership tests.

Everything that evaluates to zero at 1/10 is a multiple of 1 - 10T, and
the multiple can be recovered by exact synthetic division.  Evaluation
and division are independent procedures, so their agreement is itself a
worthwhile check.
"""

from fractions import Fraction

from laurentreal import (
    LaurentSeries,
    NotDivisibleError,
    RadiusParams,
    divide,
    evaluate,
    generator,
    in_kernel,
    inverse_truncation,
)

params = RadiusParams(Fraction(1, 2), Fraction(1, 10))
gen = generator(10)
print("generator:", gen.poly, "evaluates to", evaluate(gen.poly, params), "at 1/10")

# 10T - 1 is the same generator up to sign: dividing gives the unit -1.
flipped = LaurentSeries({0: -1, 1: 10})
print("divide(10T - 1, 1 - 10T) =", divide(flipped, gen))

# The formal inverse 1/(1 - 10T) = 1 + 10T + 100T^2 + ... truncates to
# polynomials whose product with the generator telescopes.
trunc = inverse_truncation(gen, 4)
print("\ninverse truncation:", trunc)
print("product:           ", gen.poly * trunc)

# Membership, route one: evaluate and compare with zero.
# Membership, route two: divide and watch for a remainder.
candidates = [
    gen.poly * LaurentSeries({-2: 3, 1: -7}),   # a kernel element by construction
    LaurentSeries({1: 1}),                      # T evaluates to 1/10, not in the kernel
]
for g in candidates:
    print("\ncandidate:", g)
    print("  evaluates to zero:", in_kernel(g, params))
    try:
        print("  quotient:", divide(g, gen))
    except NotDivisibleError as exc:
        print("  not divisible, remainder:", exc.remainder)
