"""The greedy digit expansion: decimal digits and beyond, with certificates.

At evaluation point 1/10 the algorithm reproduces ordinary decimal
expansion digit for digit.  At any other rational point in (0, 1) it does
the same job with bounded integer digits, and every run returns a
certificate whose bounds can be rechecked independently.
"""

from fractions import Fraction

from laurentreal import RadiusParams, evaluate, expand, series_of

params = RadiusParams(Fraction(1, 2), Fraction(1, 10))

# A terminating decimal comes back exactly, residual zero.
pi_ish = Fraction(314159, 100000)
cert = expand(pi_ish, params, max_digits=40)
print("target   =", pi_ish)
print("digits   =", list(cert.digits))
print("residual =", cert.residual)
print("evaluate(series) =", evaluate(series_of(cert), params))

# A repeating decimal stops at the digit budget with a certified residual:
# after the digit at exponent n the error is strictly below (1/10)^n.
third = expand(Fraction(1, 3), params, max_digits=6)
print("\n1/3 digits   =", list(third.digits))
print("1/3 residual =", third.residual, "<", Fraction(1, 10) ** 6)

# Digits are bounded by 1 + 1/r' and exponents never dip below the floor
# fixed by the first digit, so the digit series has a certified norm budget.
print("\ndigit bound      =", third.digit_bound)
print("exponent floor   =", third.exponent_floor)
print("norm budget      =", third.norm_budget)
print("actual norm      =", series_of(third).r_norm(params.r))

# The same machinery in base 2: 5/8 = 1/2 + 1/8.
base2 = RadiusParams(Fraction(3, 4), Fraction(1, 2))
print("\n5/8 in base 2:", list(expand(Fraction(5, 8), base2, 10).digits))

# Negative targets simply negate every digit.
print("-1/2 digits:", list(expand(Fraction(-1, 2), params, 10).digits))
