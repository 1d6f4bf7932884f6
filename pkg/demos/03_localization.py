"""
A rational segment around every root
====================================
"""
from fractions import Fraction

from hankelgap.localize import build_segment
from hankelgap.oracle import isolate_real_roots, sturm_count, sturm_sequence
from hankelgap.polyarith import poly_from_roots

roots = [-7, -2, 0, 3, 11]
p = poly_from_roots(roots)
seg = build_segment(p)

print("mean:", seg.mean)
print("radius trail:", seg.radius_trail.steps, "steps down to", float(seg.radius_trail.last))
print(f"[a, b]          = [{float(seg.a):.6f}, {float(seg.b):.6f}]")
print(f"[lo, hi] inward = [{float(seg.refined_lo):.12f}, {float(seg.refined_hi):.12f}]")

# Sturm counts as a cross-check: all five roots sit in (lo, hi]
print("roots counted inside:", sturm_count(sturm_sequence(p), seg.refined_lo, seg.refined_hi))
print("each known root inside:", [seg.contains(r) for r in roots])
for e in isolate_real_roots(p, Fraction(1, 2**20)):
    print(f"  bisection: root in ({float(e.lo):+.7f}, {float(e.hi):+.7f}]")

# an end landing within 1e-19 of a root: the inward step stays exact there
print("b - 11 =", float(seg.b - 11), "  hi - 11 =", float(seg.refined_hi - 11))

# stopping early only makes the segment looser
rough = build_segment(p, radius_iters=2, endpoint_iters=1)
print(f"after a couple of steps: [{float(rough.refined_lo):.4f}, {float(rough.refined_hi):.4f}]")
