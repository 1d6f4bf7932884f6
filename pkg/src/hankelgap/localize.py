"""A rational segment [a, b] holding every root, and its inward refinement.

The radius sequence shrinks onto the largest squared distance from a root to
the root mean; a and b are the mean minus/plus an upper square-root bound of
its last iterate. Two ascending sequences then measure how far the nearest
root sits from each end, moving the ends inward.

Square roots are the one place where exactness has to be given up, so the
rounding direction is fixed: a and b use upper bounds (segment can only
grow), the inward moves use lower bounds (they can only fall short).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gapcore import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    GapKind,
    GapSequence,
    M_seed,
    StopReason,
    log_derivative_sum,
    run_monotone,
)
from .polyarith import Poly, evaluate, even_odd_parts, taylor_shift
from .rational import DEFAULT_DENOM_CAP, DEFAULT_SQRT_PREC, as_rat, sqrt_lower, sqrt_upper


def rational_sqrt_upper(x, rel_prec=DEFAULT_SQRT_PREC) -> Fraction:
    """Rational u >= sqrt(x) with u**2 - x <= rel_prec * x; exact on perfect squares."""
    return sqrt_upper(x, rel_prec)


def _squares_polynomial(p: Poly, c: Fraction) -> Poly:
    # prod_i (y - (p_i - c)^2) from C(x) = p(x + c) = E(x^2) + x O(x^2):
    # E(y)^2 - y O(y)^2 = C(sqrt y) C(-sqrt y) = (-1)^m prod (y - r_i^2)
    e, o = even_odd_parts(taylor_shift(p, c))
    theta = e * e - Poly([0, 1]) * o * o
    return theta.monic()


def centered_squares_polynomial(p_min: Poly) -> Poly:
    """prod_i (y - (p_i - mean)**2) for a monic polynomial."""
    return _squares_polynomial(p_min, root_mean(p_min))


def endpoint_squares_polynomial(p_min: Poly, c) -> Poly:
    """prod_i (y - (p_i - c)**2)."""
    return _squares_polynomial(p_min, as_rat(c))


def root_mean(p_min: Poly) -> Fraction:
    m = p_min.degree
    return -p_min[m - 1] / p_min.lc / m


def iterate_radius(
    theta: Poly,
    m0_sq,
    tol=DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    denom_cap: int | None = DEFAULT_DENOM_CAP,
) -> GapSequence:
    """Decreasing iterates onto the largest root of ``theta`` from a dominating seed."""
    return run_monotone(theta, as_rat(m0_sq), GapKind.RADIUS, theta.degree, tol, max_iter, denom_cap)


def iterate_endpoint_min(
    sq: Poly,
    tol=DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    denom_cap: int | None = DEFAULT_DENOM_CAP,
) -> GapSequence:
    """Increasing iterates onto the smallest root of ``sq`` (all roots positive)."""
    if evaluate(sq, 0) == 0:
        # the endpoint sits on a root: distance 0 is already exact
        return GapSequence(GapKind.ENDPOINT_MIN, (Fraction(0),), StopReason.CLOSED_FORM, sq.degree)
    seed = 1 / log_derivative_sum(sq, 0)
    return run_monotone(
        sq, seed, GapKind.ENDPOINT_MIN, sq.degree, tol, max_iter, denom_cap,
        closed_form=sq.degree == 1,
    )


@dataclass(frozen=True)
class Segment:
    a: Fraction
    b: Fraction
    radius_trail: GapSequence
    alpha_trail: GapSequence
    beta_trail: GapSequence
    refined_lo: Fraction
    refined_hi: Fraction
    mean: Fraction

    def contains(self, x) -> bool:
        x = as_rat(x)
        return self.refined_lo <= x <= self.refined_hi


def build_segment(
    p_min: Poly,
    tol=DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    sqrt_prec=DEFAULT_SQRT_PREC,
    denom_cap: int | None = DEFAULT_DENOM_CAP,
    radius_iters: int | None = None,
    endpoint_iters: int | None = None,
) -> Segment:
    """Enclosing segment and its refinement for a monic square-free real-rooted polynomial.

    ``radius_iters`` / ``endpoint_iters`` cap the respective sequences
    (default ``max_iter``); stopping early only loosens the result.
    """
    m = p_min.degree
    if m < 1:
        raise ValueError("need at least one root")
    p_min = p_min.monic()
    mean = root_mean(p_min)
    theta = centered_squares_polynomial(p_min)
    if m == 1:
        radius = GapSequence(GapKind.RADIUS, (Fraction(0),), StopReason.CLOSED_FORM, 1)
    else:
        radius = iterate_radius(
            theta, M_seed(p_min), tol,
            max_iter if radius_iters is None else radius_iters, denom_cap,
        )
    half = sqrt_upper(radius.last, sqrt_prec)
    a, b = mean - half, mean + half

    e_iter = max_iter if endpoint_iters is None else endpoint_iters
    alpha = iterate_endpoint_min(endpoint_squares_polynomial(p_min, a), tol, e_iter, denom_cap)
    beta = iterate_endpoint_min(endpoint_squares_polynomial(p_min, b), tol, e_iter, denom_cap)
    lo = a + sqrt_lower(alpha.last, sqrt_prec)
    hi = b - sqrt_lower(beta.last, sqrt_prec)
    return Segment(a, b, radius, alpha, beta, lo, hi, mean)
