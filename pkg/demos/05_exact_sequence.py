"""The injection / kernel / surjection triple, checked end to end.

Multiplication by 1 - 10T is injective, its image is exactly what
evaluation at 1/10 kills, and the greedy expansion provides a preimage
for any rational target.  The seeded suite below runs all four checks
with exact comparisons; rerunning with the same seed reproduces the
report byte for byte.
"""

from fractions import Fraction

from laurentreal import RadiusParams
from laurentreal.verify import run_exactness_suite

params = RadiusParams(Fraction(1, 2), Fraction(1, 10))

for result in run_exactness_suite(params, trials=500, seed=42):
    status = "PASS" if result.passed else "FAIL"
    print(f"{status}  {result.name}  (trials={result.trials}, failures={result.failures})")

print("\nSame suite from the command line:")
print("  laurentreal verify --seed 42 --trials 1000")
