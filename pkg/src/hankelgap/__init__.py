"""Exact Hankel-matrix analysis of real-rooted polynomials and symmetric matrices.

Distinct-root counts, minimal polynomials, multiplicities, and monotone
rational sequences converging to the minimal gap, the maximal gap and an
enclosing segment of the roots.
"""
from .errors import HankelGapError, NotRealRooted
from .gapcore import (
    GapPolynomial,
    GapSequence,
    gap_polynomial,
    iterate_max_gap,
    iterate_min_gap,
    pair_sum_S,
    z_function,
)
from .hankel import HankelReport, analyze_matrix, analyze_polynomial
from .localize import Segment, build_segment
from .polyarith import Poly, poly_from_roots, square_free_part
from .wilkinson import w_recurrence, wilkinson_poly

__all__ = [
    "GapPolynomial",
    "GapSequence",
    "HankelGapError",
    "HankelReport",
    "NotRealRooted",
    "Poly",
    "Segment",
    "analyze_matrix",
    "analyze_polynomial",
    "build_segment",
    "gap_polynomial",
    "iterate_max_gap",
    "iterate_min_gap",
    "pair_sum_S",
    "poly_from_roots",
    "square_free_part",
    "w_recurrence",
    "wilkinson_poly",
    "z_function",
]
