"""Equidistant roots: W_m(x) = prod_{l=0}^{m-1} (x - mu*l).

For this family the min-gap sequence scales exactly, mu_k**2 = mu**2 w_k**2,
with w_k**2 independent of mu and driven by

    w_{k+1}**2 = w_k**2 + (sum_{l=1}^{m-1} (m - l) / (l**2 - w_k**2))**-1,

started from w_0**2 = (sum_{l=1}^{m-1} (m - l) / l**2)**-1.

The seed is often written with digamma/trigamma terms,
1 / (m*pi**2/6 - m*psi'(m) - gamma - psi(m)); at integer m,
psi(m) + gamma = sum_{l<m} 1/l and pi**2/6 - psi'(m) = sum_{l<m} 1/l**2,
so the transcendental pieces cancel and the finite sum above is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import BadDegree, BadEpsilon, TooFewRoots
from .polyarith import Poly, poly_from_roots
from .rational import DEFAULT_DENOM_CAP, as_rat, round_down, sqrt_lower, sqrt_upper

#: square-root precision used for eps_k = 1 - w_k
EPS_SQRT_PREC = Fraction(1, 2**80)


def wilkinson_poly(m: int, mu=1) -> Poly:
    if m < 1:
        raise BadDegree(f"m must be >= 1, got {m}")
    mu = as_rat(mu)
    if mu <= 0:
        raise ValueError("mu must be positive")
    return poly_from_roots([mu * l for l in range(m)])


def harmonic(n: int, power: int = 1) -> Fraction:
    """sum_{l=1}^{n} 1/l**power."""
    return sum((Fraction(1, l**power) for l in range(1, n + 1)), Fraction(0))


def w0_squared(m: int) -> Fraction:
    if m < 2:
        raise TooFewRoots("w_0 needs m >= 2")
    return 1 / sum((Fraction(m - l, l * l) for l in range(1, m)), Fraction(0))


def w0_squared_from_digamma_form(m: int) -> Fraction:
    """Same value assembled term by term from the digamma-style expression."""
    if m < 2:
        raise TooFewRoots("w_0 needs m >= 2")
    pi2_6_minus_trigamma = harmonic(m - 1, 2)
    gamma_plus_digamma = harmonic(m - 1, 1)
    return 1 / (m * pi2_6_minus_trigamma - gamma_plus_digamma)


def _inverse_step(m: int, w2: Fraction) -> Fraction:
    return 1 / sum((Fraction(m - l) / (l * l - w2) for l in range(1, m)), Fraction(0))


@dataclass(frozen=True)
class WilkinsonSpec:
    """w_k**2 trail and bounds on eps_k = 1 - w_k.

    ``eps_trail`` holds upper bounds of eps_k (from lower bounds of w_k),
    ``eps_lower_trail`` the matching lower bounds.
    """

    m: int
    mu: Fraction
    w_trail: tuple[Fraction, ...]
    eps_trail: tuple[Fraction, ...]
    eps_lower_trail: tuple[Fraction, ...]

    @property
    def mu_trail(self) -> tuple[Fraction, ...]:
        """Squared min-gap iterates for spacing ``mu``."""
        return tuple(self.mu**2 * w for w in self.w_trail)


def w_recurrence(m: int, steps: int, mu=1, denom_cap: int | None = DEFAULT_DENOM_CAP) -> WilkinsonSpec:
    if m < 3:
        raise TooFewRoots(f"the recurrence needs m >= 3, got {m}")
    w2 = w0_squared(m)
    trail = [w2]
    for _ in range(steps):
        exact = w2 + _inverse_step(m, w2)
        nxt = round_down(exact, denom_cap)
        if nxt <= w2:
            nxt = exact
        w2 = nxt
        trail.append(w2)
    eps_hi = tuple(1 - sqrt_lower(w, EPS_SQRT_PREC) for w in trail)
    eps_lo = tuple(1 - sqrt_upper(w, EPS_SQRT_PREC) for w in trail)
    return WilkinsonSpec(m, as_rat(mu), tuple(trail), eps_hi, eps_lo)


def w_until(m: int, delta, max_iter: int = 10_000, denom_cap: int | None = DEFAULT_DENOM_CAP) -> WilkinsonSpec:
    """Run the recurrence until eps_k < delta is certified (or max_iter)."""
    delta = as_rat(delta)
    if m < 3:
        raise TooFewRoots(f"the recurrence needs m >= 3, got {m}")
    w2 = w0_squared(m)
    trail = [w2]
    while 1 - sqrt_lower(w2, EPS_SQRT_PREC) >= delta and len(trail) <= max_iter:
        exact = w2 + _inverse_step(m, w2)
        nxt = round_down(exact, denom_cap)
        w2 = exact if nxt <= w2 else nxt
        trail.append(w2)
    eps_hi = tuple(1 - sqrt_lower(w, EPS_SQRT_PREC) for w in trail)
    eps_lo = tuple(1 - sqrt_upper(w, EPS_SQRT_PREC) for w in trail)
    return WilkinsonSpec(m, Fraction(1), tuple(trail), eps_hi, eps_lo)


def rate_bounds(m: int, eps) -> tuple[Fraction, Fraction]:
    """(4 eps / (7m - 4), 1/(m - 1)): bracket on w_{k+1}**2 - w_k**2 when w_k = 1 - eps."""
    if m < 3:
        raise TooFewRoots("rate bounds need m >= 3")
    eps = as_rat(eps)
    if not 0 < eps < 1:
        raise BadEpsilon(f"eps must lie in (0, 1), got {eps}")
    return Fraction(4) * eps / (7 * m - 4), Fraction(1, m - 1)


def geometric_ratio(m: int) -> Fraction:
    """q(m) = (7m - 6)/(7m - 4)."""
    return Fraction(7 * m - 6, 7 * m - 4)


def rate_checks(spec: WilkinsonSpec) -> list[bool]:
    """Per step: does w_{k+1}**2 - w_k**2 fall inside rate_bounds(m, eps_k)?

    eps_k is taken at its certified lower bound, which can only make the
    lower bound of the bracket easier to meet honestly (it never turns a
    true inequality false).
    """
    out = []
    for k in range(len(spec.w_trail) - 1):
        inc = spec.w_trail[k + 1] - spec.w_trail[k]
        lo, hi = rate_bounds(spec.m, spec.eps_lower_trail[k])
        out.append(lo < inc < hi)
    return out


def majorant_checks(spec: WilkinsonSpec, offset: int = 0) -> list[bool]:
    """eps_k <= eps_0 * q**(k - offset) for each k, conservatively bounded.

    ``offset=0`` is the strong form, ``offset=1`` the weaker one.
    """
    q = geometric_ratio(spec.m)
    eps0 = spec.eps_lower_trail[0]
    out = []
    for k, eps in enumerate(spec.eps_trail):
        if k == 0:
            # eps_0 <= eps_0; comparing opposite ends of its sqrt bracket would be spurious
            out.append(True)
            continue
        e = max(k - offset, 0)
        out.append(eps <= eps0 * q**e)
    return out


def eps0(m: int) -> tuple[Fraction, Fraction]:
    """Bracket (lo, hi) on eps_0(m) = 1 - w_0(m); lo == hi when w_0 is rational."""
    w2 = w0_squared(m)
    return 1 - sqrt_upper(w2, EPS_SQRT_PREC), 1 - sqrt_lower(w2, EPS_SQRT_PREC)


def predicted_iterations(m: int, delta) -> int:
    """ceil((7m - 4)/2 * (1 - delta/eps_0)); 0 once delta >= eps_0."""
    if m < 3:
        raise TooFewRoots("the forecast needs m >= 3")
    delta = as_rat(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    _, e_hi = eps0(m)
    if delta >= e_hi:
        return 0
    return max(0, ceil(Fraction(7 * m - 4, 2) * (1 - delta / e_hi)))


def observed_iterations(m: int, delta, max_iter: int = 10_000) -> int:
    """First k at which eps_k < delta is certified."""
    spec = w_until(m, delta, max_iter)
    return len(spec.w_trail) - 1
