"""
Counting distinct roots with a Hankel ladder
============================================

Power sums of the roots fill a Hankel matrix; its leading minors stay
positive up to the number of distinct roots and vanish afterwards.
"""
from fractions import Fraction

from hankelgap import analyze_polynomial, analyze_matrix, NotRealRooted
from hankelgap.polyarith import Poly, poly_from_roots

# x^3 - 4x^2 + 3x: roots 0, 1, 3
p = Poly([0, 3, -4, 1])
rep = analyze_polynomial(p)
print("power sums:", [str(t) for t in rep.sums.t])
print("determinants:", [str(d) for d in rep.dets])
print("distinct roots:", rep.m)

# a double root shows up as a zero on the ladder
q = poly_from_roots([1, 2], [2, 1])
rep = analyze_polynomial(q)
print(q, "->", [str(d) for d in rep.dets], "minimal:", rep.minimal)

# the minimal polynomial comes straight out of bordered minors
print("sigma:", [str(s) for s in rep.sigma])

# complex roots break the sign pattern
try:
    analyze_polynomial(Poly([1, 0, 1]))
except NotRealRooted as exc:
    print("x^2 + 1:", exc)

# same thing from a symmetric matrix, via traces of its powers
a = [[Fraction(v) for v in row] for row in ([2, 1, 0], [1, 2, 1], [0, 1, 2])]
rep = analyze_matrix(a)
print("tridiagonal 3x3: m =", rep.m, " minimal:", rep.minimal)
