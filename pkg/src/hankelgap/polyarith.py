"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending order: ``coeffs[k]`` multiplies ``x**k``.
The zero polynomial has an empty coefficient tuple.  All arithmetic is exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicateRoot, NotEven, NotSquareFree, ZeroPolynomial
from .rational import as_rat, bareiss_det, fmt_rat


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial cannot be made monic")
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        return divmod_poly(self, _lift(other))

    def __floordiv__(self, other):
        return divmod_poly(self, _lift(other))[0]

    def __mod__(self, other):
        return divmod_poly(self, _lift(other))[1]

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_strings(self) -> list[str]:
        return [fmt_rat(c) for c in self.coeffs]


def _lift(p) -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly([p])


def format_poly(p: Poly, var: str = "x") -> str:
    """Human form, highest degree first, e.g. ``x^2 - 3x + 2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mag = str(a) if (a != 1 or k == 0) else ""
        if k == 0:
            term = mag
        elif k == 1:
            term = f"{mag}{var}"
        else:
            term = f"{mag}{var}^{k}"
        parts.append((sign, term))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


# ---------------------------------------------------------------------------
# basic operations


def poly_from_roots(roots: Sequence, mults: Sequence[int] | None = None) -> Poly:
    """Monic prod (x - roots[i])**mults[i]."""
    roots = [as_rat(r) for r in roots]
    if mults is None:
        mults = [1] * len(roots)
    if len(roots) != len(mults):
        raise ValueError("roots and mults must have the same length")
    if len(set(roots)) != len(roots):
        raise DuplicateRoot("roots must be pairwise distinct; use mults for repetition")
    out = Poly([1])
    for r, k in zip(roots, mults):
        if k < 1:
            raise ValueError("multiplicities must be positive")
        out = out * Poly([-r, 1]) ** k
    return out


def derivative(p: Poly) -> Poly:
    return Poly(k * c for k, c in enumerate(p.coeffs) if k > 0)


def evaluate(p: Poly, x) -> Fraction:
    """Horner evaluation."""
    x = as_rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def taylor_shift(p: Poly, c) -> Poly:
    """Return q with q(x) = p(x + c)."""
    c = as_rat(c)
    a = list(p.coeffs)
    n = len(a)
    # repeated synthetic division by (x - c), in place
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return Poly(a)


def scale_variable(p: Poly, s) -> Poly:
    """Return q with q(x) = p(s*x)."""
    s = as_rat(s)
    out, f = [], Fraction(1)
    for c in p.coeffs:
        out.append(c * f)
        f *= s
    return Poly(out)


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return Poly(), a
    quo = [Fraction(0)] * (len(rem) - db)
    inv = 1 / b.lc
    for k in range(len(rem) - 1, db - 1, -1):
        q = rem[k] * inv
        quo[k - db] = q
        if q:
            for j in range(db + 1):
                rem[k - db + j] -= q * b.coeffs[j]
    return Poly(quo), Poly(rem[:db])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (Euclidean remainder sequence over Q)."""
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        r = divmod_poly(a, b)[1]
        a, b = b, (r.monic() if not r.is_zero() else r)
    return a.monic()


def square_free_part(p: Poly) -> Poly:
    """p / gcd(p, p'), made monic."""
    if p.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree == 0:
        return Poly([1])
    g = gcd(p, derivative(p))
    q, r = divmod_poly(p, g)
    assert r.is_zero()
    return q.monic()


def even_substitute(p: Poly) -> Poly:
    """Return q with q(z**2) = p(z); p must have no odd-degree terms."""
    if any(c != 0 for c in p.coeffs[1::2]):
        raise NotEven("polynomial has nonzero odd-degree coefficients")
    return Poly(p.coeffs[0::2])


def even_odd_parts(p: Poly) -> tuple[Poly, Poly]:
    """Split p(x) = E(x**2) + x*O(x**2); returns (E, O)."""
    return Poly(p.coeffs[0::2]), Poly(p.coeffs[1::2])


# ---------------------------------------------------------------------------
# resultants


def sylvester_matrix(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[list[Fraction]]:
    """Sylvester matrix of two coefficient lists given in ascending order."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    fd, gd = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(dg):
        rows.append([Fraction(0)] * i + fd + [Fraction(0)] * (size - i - df - 1))
    for i in range(df):
        rows.append([Fraction(0)] * i + gd + [Fraction(0)] * (size - i - dg - 1))
    return rows


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) as the Sylvester determinant."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if f.degree == 0:
        return f.lc**g.degree
    if g.degree == 0:
        return g.lc**f.degree
    return bareiss_det(sylvester_matrix(f.coeffs, g.coeffs))


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """Exact interpolating polynomial through (xs[i], ys[i]) via Newton divided differences."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    out = Poly([dd[-1]])
    for i in range(n - 2, -1, -1):
        out = out * Poly([-xs[i], 1]) + dd[i]
    return out


def difference_resultant(p: Poly) -> Poly:
    """R(z) = Res_x(p(x), p(x + z)) / z**m for monic square-free p of degree m.

    R(z) = prod_{i<j} (z**2 - (p_i - p_j)**2), an even polynomial of degree
    m(m-1).  The resultant is degree m**2 in z; it is sampled at m**2 + 1
    integer points, each sample a Bareiss determinant, then interpolated.
    """
    m = p.degree
    if m < 2:
        raise ValueError("difference_resultant needs degree >= 2")
    if not p.is_monic():
        raise ValueError("difference_resultant needs a monic polynomial")
    if gcd(p, derivative(p)).degree > 0:
        raise NotSquareFree("p has a repeated root")
    xs = [Fraction(k) for k in range(m * m + 1)]
    ys = [resultant(p, taylor_shift(p, z)) for z in xs]
    res = interpolate(xs, ys)
    if any(c != 0 for c in res.coeffs[:m]):
        raise NotSquareFree("resultant is not divisible by z^m")
    out = Poly(res.coeffs[m:])
    if out.degree != m * (m - 1):
        raise NotSquareFree(f"expected degree {m * (m - 1)}, got {out.degree}")
    return out
