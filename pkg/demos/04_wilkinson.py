"""
Equidistant roots: how fast does the lower gap sequence close in?
=================================================================
"""
from fractions import Fraction

from hankelgap import wilkinson as W

print("W_4 =", W.wilkinson_poly(4))

for m in range(3, 11):
    spec = W.w_recurrence(m, 30)
    print(f"m={m:2d}  w0^2={str(W.w0_squared(m)):>14}  rate bracket ok: {all(W.rate_checks(spec))}"
          f"  majorant ok: {all(W.majorant_checks(spec))}")

# forecast against what actually happens
delta = Fraction(1, 1000)
print("\n m  forecast  observed")
for m in range(3, 11):
    print(f"{m:2d}  {W.predicted_iterations(m, delta):8d}  {W.observed_iterations(m, delta):8d}")
# only m = 3 stays under the forecast; past that the linear rate near 1 takes over
