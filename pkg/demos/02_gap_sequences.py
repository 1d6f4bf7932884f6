"""
Squeezing the smallest and largest root gap
===========================================
"""
from fractions import Fraction

from hankelgap import gapcore
from hankelgap.polyarith import Poly, poly_from_roots

p = Poly([0, 3, -4, 1])          # roots 0, 1, 3
gp = gapcore.gap_polynomial(p)
print("gap polynomial:", gp.delta)  # roots 1, 4, 9

mu = gapcore.iterate_min_gap(gp)
big = gapcore.iterate_max_gap(gp, p)
for k, (a, b) in enumerate(zip(mu.iterates, big.iterates)):
    print(f"{k:2d}  mu^2 = {float(a):.15f}   M^2 = {float(b):.15f}")
print("min gap steps:", mu.steps, mu.stop_reason.value)
print("max gap steps:", big.steps, big.stop_reason.value)

# first iterates are plain fractions
print("mu_0^2 =", mu.iterates[0], "  M_1^2 =", big.iterates[1])

# a tie at the minimum (two gaps of size 1) slows the lower sequence down
tied = poly_from_roots([0, 1, 2, 5])
gp = gapcore.gap_polynomial(tied)
seq = gapcore.iterate_min_gap(gp)
print("tied minimum:", seq.steps, "steps, last growth",
      float(gapcore.stop_rule_min(4, seq.iterates[-2], seq.iterates[-1]).growth))

# two roots: nothing to iterate
print(gapcore.iterate_min_gap(gapcore.gap_polynomial(Poly([2, -3, 1]))))

# Z(eps) and the pair sum agree exactly
eps = Fraction(1, 3)
z = gapcore.z_function(gapcore.gap_polynomial(p), eps)
print((z + Fraction(3) / (2 * eps)) / eps == gapcore.pair_sum_S(gapcore.gap_polynomial(p), eps**2))
