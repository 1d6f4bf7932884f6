"""Exact rational helpers: parsing, directed rounding, square-root bounds and
fraction-free determinants.

Every scalar in the package is a :class:`fractions.Fraction`; ``Rat`` is just
an alias to make signatures read naturally.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .errors import NegativeRadicand

Rat = Fraction

DEFAULT_DENOM_CAP = 2**128
DEFAULT_SQRT_PREC = Fraction(1, 2**40)


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` or ``"1e-9"``.

    Floats are rejected: silently importing binary rounding error into an
    exact pipeline is never what the caller wants.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or a string")
    return Fraction(value)


def fmt_rat(x: Fraction) -> str:
    """Lossless ``num/den`` form (the denominator is always written)."""
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# directed rounding to a bounded denominator


def _bracketing_approximations(x: Fraction, cap: int) -> tuple[Fraction, Fraction]:
    """Tightest fractions with denominator <= cap on each side of ``x``.

    Stern-Brocot descent along the continued fraction of ``x``; the final
    convergent and semiconvergent straddle ``x``.
    """
    p0, q0, p1, q1 = 0, 1, 1, 0
    n, d = x.numerator, x.denominator
    while True:
        a = n // d
        q2 = q0 + a * q1
        if q2 > cap:
            break
        p0, q0, p1, q1 = p1, q1, p0 + a * p1, q2
        n, d = d, n - a * d
    k = (cap - q0) // q1
    semi = Fraction(p0 + k * p1, q0 + k * q1)
    conv = Fraction(p1, q1)
    return (semi, conv) if semi < conv else (conv, semi)


def round_down(x: Fraction, cap: int | None) -> Fraction:
    """Largest fraction <= x whose denominator does not exceed ``cap``."""
    if cap is None or x.denominator <= cap:
        return x
    lo, _ = _bracketing_approximations(x, cap)
    return lo


def round_up(x: Fraction, cap: int | None) -> Fraction:
    """Smallest fraction >= x whose denominator does not exceed ``cap``."""
    if cap is None or x.denominator <= cap:
        return x
    _, hi = _bracketing_approximations(x, cap)
    return hi


# ---------------------------------------------------------------------------
# square roots


def exact_sqrt(x: Fraction) -> Fraction | None:
    """Return sqrt(x) if it is rational, otherwise None."""
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_bounds(x: Fraction, rel_prec: Fraction) -> tuple[Fraction, Fraction]:
    if x < 0:
        raise NegativeRadicand(f"cannot take the square root of {x}")
    exact = exact_sqrt(x)
    if exact is not None:
        return exact, exact
    rel_prec = as_rat(rel_prec)
    if rel_prec <= 0:
        raise ValueError("rel_prec must be positive")
    s = 8
    while True:
        scaled = (x.numerator << (2 * s)) // x.denominator
        r = isqrt(scaled)
        lo = Fraction(r, 1 << s)
        hi = Fraction(r + 1, 1 << s)
        if hi * hi - x <= rel_prec * x and x - lo * lo <= rel_prec * x:
            return lo, hi
        s *= 2


def sqrt_upper(x, rel_prec=DEFAULT_SQRT_PREC) -> Fraction:
    """Rational u with u >= sqrt(x) and u**2 - x <= rel_prec * x."""
    return _sqrt_bounds(as_rat(x), rel_prec)[1]


def sqrt_lower(x, rel_prec=DEFAULT_SQRT_PREC) -> Fraction:
    """Rational l with l <= sqrt(x) and x - l**2 <= rel_prec * x."""
    return _sqrt_bounds(as_rat(x), rel_prec)[0]


# ---------------------------------------------------------------------------
# determinants


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def bareiss_det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rational entries are first scaled to integers by the common denominator,
    so every intermediate is an integer minor.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    den = 1
    for row in matrix:
        for v in row:
            den = _lcm(den, Fraction(v).denominator)
    a = [[int(Fraction(v) * den) for v in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], den**n)


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a nonsingular rational linear system by Gauss-Jordan elimination."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [vr - f * vc for vr, vc in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]
