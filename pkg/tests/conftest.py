from fractions import Fraction

import hypothesis.strategies as st

from laurentreal import LaurentSeries

coefficients = st.integers(min_value=-(10**6), max_value=10**6)
exponents = st.integers(min_value=-6, max_value=12)

series = st.dictionaries(exponents, coefficients, max_size=8).map(LaurentSeries)
nonzero_series = series.filter(bool)

# rationals kept small enough that norms and products stay fast
rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**6
)
nonzero_rationals = rationals.filter(lambda q: q != 0)

shift_amounts = st.integers(min_value=-5, max_value=5)
