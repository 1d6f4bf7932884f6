"""Monotone rational sequences converging to the minimal and maximal root gap.

Everything is driven by the gap polynomial

    Delta(y) = prod_{i<j} (y - (p_i - p_j)**2)

whose roots are the squared gaps, repeated gaps kept with multiplicity. Its
logarithmic derivative gives the pair sum

    S(t) = sum_{i<j} 1 / ((p_i - p_j)**2 - t) = -Delta'(t) / Delta(t)

and both gap sequences are x_{k+1} = x_k + 1/S(x_k): from below starting at
1/S(0) for the minimal gap, from above starting at sum_{i<j}(p_i - p_j)**2
for the maximal gap. Each iterate is a rational function of the input
coefficients.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import InternalInvariantError, PoleHit, TooFewRoots, ZeroEpsilon
from .hankel import power_sums_from_coeffs
from .polyarith import Poly, derivative, difference_resultant, evaluate, even_substitute
from .rational import DEFAULT_DENOM_CAP, as_rat, round_down, round_up

DEFAULT_TOL = Fraction(1, 2**40)
DEFAULT_MAX_ITER = 10_000


class GapKind(str, enum.Enum):
    MIN_GAP = "MinGap"
    MAX_GAP = "MaxGap"
    RADIUS = "Radius"
    ENDPOINT_MIN = "EndpointMin"


class StopReason(str, enum.Enum):
    TOLERANCE = "ToleranceReached"
    MAX_ITERATIONS = "MaxIterations"
    CLOSED_FORM = "ClosedForm"


_ASCENDING = {GapKind.MIN_GAP, GapKind.ENDPOINT_MIN}


@dataclass(frozen=True)
class GapSequence:
    """Trail of squared iterates with the reason the iteration stopped."""

    kind: GapKind
    iterates: tuple[Fraction, ...]
    stop_reason: StopReason
    m: int

    @property
    def last(self) -> Fraction:
        return self.iterates[-1]

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def ascending(self) -> bool:
        return self.kind in _ASCENDING

    def is_strictly_monotone(self) -> bool:
        it = self.iterates
        if self.ascending:
            return all(a < b for a, b in zip(it, it[1:]))
        return all(a > b for a, b in zip(it, it[1:]))


@dataclass(frozen=True)
class GapPolynomial:
    delta: Poly
    m: int
    _ddelta: Poly = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_ddelta", derivative(self.delta))


def gap_polynomial(p_min: Poly) -> GapPolynomial:
    """Delta(y) for a monic square-free real-rooted polynomial of degree >= 2."""
    m = p_min.degree
    if m < 2:
        raise TooFewRoots(f"a gap needs at least two distinct roots, got {m}")
    delta = even_substitute(difference_resultant(p_min))
    if evaluate(delta, 0) == 0:
        raise InternalInvariantError("gap polynomial vanishes at 0")
    return GapPolynomial(delta, m)


def log_derivative_sum(poly: Poly, t, dpoly: Poly | None = None) -> Fraction:
    """sum 1/(q - t) over the roots q of ``poly`` (with multiplicity)."""
    t = as_rat(t)
    val = evaluate(poly, t)
    if val == 0:
        raise PoleHit(f"{t} is a root of the polynomial")
    if dpoly is None:
        dpoly = derivative(poly)
    return -evaluate(dpoly, t) / val


def pair_sum_S(gp: GapPolynomial, t) -> Fraction:
    """S(t) = sum_{i<j} 1 / ((p_i - p_j)**2 - t)."""
    return log_derivative_sum(gp.delta, t, gp._ddelta)


def z_function(gp: GapPolynomial | None, eps, m: int | None = None) -> Fraction:
    """Z(eps) = -m/(2 eps) + eps * S(eps**2).

    ``gp`` may be None for a single distinct root, in which case ``m`` must
    be given (and is 1); then the pair sum is empty.
    """
    eps = as_rat(eps)
    if eps == 0:
        raise ZeroEpsilon("Z is undefined at eps = 0")
    if gp is None:
        m = 1 if m is None else m
        if m != 1:
            raise ValueError("a gap polynomial is required when m >= 2")
        return -Fraction(1) / (2 * eps)
    return -Fraction(gp.m) / (2 * eps) + eps * pair_sum_S(gp, eps * eps)


def mu_seed(gp: GapPolynomial) -> Fraction:
    """mu_0**2 = 1 / sum_{i<j} (p_i - p_j)**-2, strictly below the minimal squared gap."""
    return 1 / pair_sum_S(gp, 0)


def M_seed(p_min: Poly) -> Fraction:
    """M_0**2 = s_0 s_2 - s_1**2 = sum_{i<j} (p_j - p_i)**2, from the minimal polynomial."""
    if p_min.degree < 2:
        raise TooFewRoots("M_seed needs at least two distinct roots")
    s = power_sums_from_coeffs(p_min, 3)
    return s[0] * s[2] - s[1] ** 2


def run_monotone(
    poly: Poly,
    seed: Fraction,
    kind: GapKind,
    m: int,
    tol=DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    denom_cap: int | None = DEFAULT_DENOM_CAP,
    closed_form: bool = False,
) -> GapSequence:
    """Iterate x <- x + 1/(sum 1/(q - x)) over the roots q of ``poly``.

    This is a Newton step on ``poly`` approaching its nearest root from one
    side. Iterates are rounded outward (down when ascending, up when
    descending) to denominators <= ``denom_cap``; the rounding is skipped if
    it would cost strict monotonicity.
    """
    tol = as_rat(tol)
    seed = as_rat(seed)
    ascending = kind in _ASCENDING
    if closed_form:
        return GapSequence(kind, (seed,), StopReason.CLOSED_FORM, m)
    dpoly = derivative(poly)
    rnd = round_down if ascending else round_up
    trail = [seed]
    x = seed
    reason = StopReason.MAX_ITERATIONS
    for _ in range(max_iter):
        if evaluate(poly, x) == 0:
            # previous step landed exactly on the limit
            reason = StopReason.TOLERANCE
            break
        step = 1 / log_derivative_sum(poly, x, dpoly)
        exact = x + step
        nxt = rnd(exact, denom_cap)
        if (ascending and nxt <= x) or (not ascending and nxt >= x):
            nxt = exact
        if (ascending and not nxt > x) or (not ascending and not nxt < x):
            raise InternalInvariantError(f"{kind.value} sequence lost strict monotonicity at {x}")
        trail.append(nxt)
        done = x == 0 or abs(nxt - x) < tol * abs(x)
        x = nxt
        if done:
            reason = StopReason.TOLERANCE
            break
    return GapSequence(kind, tuple(trail), reason, m)


def iterate_min_gap(
    gp: GapPolynomial,
    tol=DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    denom_cap: int | None = DEFAULT_DENOM_CAP,
) -> GapSequence:
    """Increasing squared iterates mu_k**2 with limit (min gap)**2."""
    return run_monotone(
        gp.delta, mu_seed(gp), GapKind.MIN_GAP, gp.m, tol, max_iter, denom_cap,
        closed_form=gp.m == 2,
    )


def iterate_max_gap(
    gp: GapPolynomial,
    p_min: Poly,
    tol=DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    denom_cap: int | None = DEFAULT_DENOM_CAP,
) -> GapSequence:
    """Decreasing squared iterates M_k**2 with limit (max gap)**2."""
    return run_monotone(
        gp.delta, M_seed(p_min), GapKind.MAX_GAP, gp.m, tol, max_iter, denom_cap,
        closed_form=gp.m == 2,
    )


class MinStopDiagnostic(NamedTuple):
    growth: Fraction
    in_regime: bool
    above_floor: bool


def stop_rule_min(m: int, mu_prev_sq, mu_next_sq) -> MinStopDiagnostic:
    """Where the relative growth mu_{k+1}**2/mu_k**2 - 1 sits against 4/(3m) and 4/(3m**2).

    Growth below 4/(3m) means the late-iteration regime has been entered; the
    floor 4/(3m**2) is only guaranteed inside that regime, so dropping under
    it is reported, not treated as an error.
    """
    if m < 3:
        raise TooFewRoots("the min-gap stopping diagnostic needs m >= 3")
    growth = as_rat(mu_next_sq) / as_rat(mu_prev_sq) - 1
    return MinStopDiagnostic(growth, growth < Fraction(4, 3 * m), growth > Fraction(4, 3 * m * m))


def stop_rule_max(m: int, delta) -> tuple[Fraction, Fraction]:
    """Bracket on 1 - M_{k+1}**2/M_k**2 once the iteration is within precision delta."""
    if m < 3:
        raise TooFewRoots("the max-gap stopping bracket needs m >= 3")
    delta = as_rat(delta)
    c = Fraction(2, (m + 1) * (m - 2))
    return c * delta, (1 + c) * delta


def relative_decrease(seq: GapSequence) -> Fraction | None:
    """1 - x_K/x_{K-1} for the last step, or None if no step was taken."""
    if seq.steps == 0:
        return None
    return 1 - seq.iterates[-1] / seq.iterates[-2]
