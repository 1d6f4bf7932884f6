"""Hankel-matrix view of a real-rooted polynomial or a symmetric matrix.

From the power sums t_k = sum_l r_l p_l**k one builds H_k = [t_{i+j}]
(0-based). The leading determinants D_k are positive up to the number of
distinct roots m and vanish afterwards, which gives both the distinct-root
count and a certificate that all roots are real. The monic minimal
polynomial prod (x - p_i) falls out of the bordered Hankel determinant, with
every coefficient a ratio of Hankel minors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    InconsistentRank,
    InternalInvariantError,
    MultiplicityUnresolved,
    NotEnoughSums,
    NotHermitian,
    NotRealRooted,
    SingularHankel,
    ZeroPolynomial,
)
from .oracle import RootEnclosure
from .polyarith import Poly, divmod_poly, square_free_part
from .rational import as_rat, bareiss_det, fmt_rat, solve_exact


@dataclass(frozen=True)
class PowerSums:
    t: tuple[Fraction, ...]
    n: int

    def __post_init__(self):
        if self.t and self.t[0] != self.n:
            raise ValueError("t[0] must equal the total degree n")

    def __len__(self):
        return len(self.t)

    def __getitem__(self, k):
        return self.t[k]


def power_sums_from_coeffs(p: Poly, count: int) -> PowerSums:
    """t_0 .. t_{count-1} over all roots (with multiplicity), by Newton's identities."""
    if p.is_zero():
        raise ZeroPolynomial("power sums of the zero polynomial")
    if count < 1:
        raise ValueError("count must be >= 1")
    q = p.monic()
    n = q.degree
    # e_k with p = x^n - e_1 x^{n-1} + e_2 x^{n-2} - ...
    e = [Fraction(1)] + [(-1) ** k * q.coeffs[n - k] for k in range(1, n + 1)]
    t = [Fraction(n)]
    for k in range(1, count):
        s = Fraction(0)
        for i in range(1, min(k, n + 1)):
            s += (-1) ** (i - 1) * e[i] * t[k - i]
        if k <= n:
            s += (-1) ** (k - 1) * k * e[k]
        t.append(s)
    return PowerSums(tuple(t[:count]), n)


def coeffs_from_power_sums(sums: PowerSums) -> Poly:
    """Monic degree-n polynomial whose roots have power sums ``sums`` (inverse Newton)."""
    n = sums.n
    if len(sums) < n + 1:
        raise NotEnoughSums(f"need t_0..t_{n}")
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * sums[i] for i in range(1, k + 1))
        e.append(s / k)
    return Poly([(-1) ** (n - j) * e[n - j] for j in range(n + 1)])


def _check_symmetric(a: Sequence[Sequence[Fraction]]):
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise NotHermitian("matrix must be square and non-empty")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise NotHermitian(f"entry ({i},{j}) differs from ({j},{i})")


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def power_sums_from_hermitian(a, count: int, embedded: bool = False) -> PowerSums:
    """t_k = trace(A**k) for a real symmetric rational matrix.

    With ``embedded=True`` the matrix is taken to be the real block form of a
    complex Hermitian matrix (see :func:`hermitian_embedding`); its spectrum
    is the complex one with every multiplicity doubled, so all sums are halved.
    """
    a = [[as_rat(v) for v in row] for row in a]
    _check_symmetric(a)
    n = len(a)
    if embedded and n % 2:
        raise NotHermitian("an embedded Hermitian matrix has even size")
    t = [Fraction(n)]
    power = a
    for _ in range(1, count):
        t.append(sum((power[i][i] for i in range(n)), Fraction(0)))
        power = _matmul(power, a)
    t = t[:count]
    if embedded:
        return PowerSums(tuple(x / 2 for x in t), n // 2)
    return PowerSums(tuple(t), n)


def hermitian_embedding(re, im) -> list[list[Fraction]]:
    """Real symmetric form [[Re, -Im], [Im, Re]] of the Hermitian matrix Re + i*Im."""
    re = [[as_rat(v) for v in row] for row in re]
    im = [[as_rat(v) for v in row] for row in im]
    n = len(re)
    for i in range(n):
        for j in range(n):
            if re[i][j] != re[j][i] or im[i][j] != -im[j][i]:
                raise NotHermitian("Re must be symmetric and Im antisymmetric")
    top = [re[i] + [-v for v in im[i]] for i in range(n)]
    bottom = [im[i] + re[i] for i in range(n)]
    return top + bottom


def hankel_matrix(sums: PowerSums, k: int) -> list[list[Fraction]]:
    if len(sums) < 2 * k - 1:
        raise NotEnoughSums(f"H_{k} needs t_0..t_{2 * k - 2}")
    return [[sums[i + j] for j in range(k)] for i in range(k)]


def hankel_determinants(sums: PowerSums, n: int) -> list[Fraction]:
    """[D_1, ..., D_n] by Bareiss elimination."""
    if len(sums) < 2 * n - 1:
        raise NotEnoughSums(f"D_1..D_{n} need t_0..t_{2 * n - 2}, have {len(sums)} sums")
    return [bareiss_det(hankel_matrix(sums, k)) for k in range(1, n + 1)]


def distinct_root_count(dets: Sequence[Fraction]) -> int:
    """Number of distinct roots, certifying along the way that all are real.

    Real roots force D_k > 0 for k <= m and D_k == 0 beyond; anything else
    means complex roots are present.
    """
    if not dets:
        raise ValueError("empty determinant list")
    m = 0
    for k, d in enumerate(dets, start=1):
        if d < 0:
            raise NotRealRooted(f"not real-rooted: D_{k} = {fmt_rat(d)} < 0", k, d)
        if d > 0:
            if m != k - 1:
                raise NotRealRooted(
                    f"not real-rooted: D_{k} = {fmt_rat(d)} follows a vanishing D_{m + 1}", k, d
                )
            m = k
    return m


def minimal_polynomial(sums: PowerSums, m: int) -> tuple[Poly, list[Fraction]]:
    """Monic prod (x - p_i) from the bordered Hankel determinant.

    Expanding the bordered determinant along its last row [1, x, ..., x^m],
    the coefficient of x^j is (-1)^(m+j) times the minor of the first m rows
    with column j removed, over D_m. Returns (polynomial, [sigma_1..sigma_m]).
    """
    if len(sums) < 2 * m:
        raise NotEnoughSums(f"minimal polynomial of degree {m} needs t_0..t_{2 * m - 1}")
    if m == 0:
        return Poly([1]), []
    rows = [[sums[i + j] for j in range(m + 1)] for i in range(m)]
    d_m = bareiss_det([row[:m] for row in rows])
    if d_m == 0:
        raise InconsistentRank(f"D_{m} vanishes; m={m} is not the Hankel rank")
    minors = [bareiss_det([row[:j] + row[j + 1 :] for row in rows]) for j in range(m + 1)]
    coeffs = [(-1) ** (m + j) * minors[j] / d_m for j in range(m + 1)]
    sigma = [minors[m - k] / d_m for k in range(1, m + 1)]
    return Poly(coeffs), sigma


@dataclass(frozen=True)
class HankelReport:
    sums: PowerSums
    dets: tuple[Fraction, ...]
    m: int
    minimal: Poly
    sigma: tuple[Fraction, ...]
    characteristic: Poly | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.sums.n

    def hankel(self, k: int | None = None) -> list[list[Fraction]]:
        return hankel_matrix(self.sums, self.m if k is None else k)


def _report_from_sums(sums: PowerSums, characteristic: Poly) -> HankelReport:
    n = sums.n
    dets = hankel_determinants(sums, n)
    m = distinct_root_count(dets)
    minimal, sigma = minimal_polynomial(sums, m)
    # second route to the same polynomial; disagreement is a bug
    sqf = square_free_part(characteristic)
    if sqf != minimal:
        raise InternalInvariantError(f"Hankel minimal polynomial {minimal} != square-free part {sqf}")
    if not divmod_poly(characteristic, minimal)[1].is_zero():
        raise InternalInvariantError("minimal polynomial does not divide the input")
    return HankelReport(sums, tuple(dets), m, minimal, tuple(sigma), characteristic)


def analyze_polynomial(p: Poly) -> HankelReport:
    """Full Hankel report for a polynomial; raises NotRealRooted on complex roots."""
    if p.is_zero():
        raise ZeroPolynomial("cannot analyse the zero polynomial")
    n = p.degree
    if n < 1:
        raise ValueError("polynomial must have degree >= 1")
    sums = power_sums_from_coeffs(p, 2 * n)
    return _report_from_sums(sums, p.monic())


def analyze_matrix(a, embedded: bool = False) -> HankelReport:
    """Hankel report for the spectrum of a real symmetric (or embedded Hermitian) matrix."""
    size = len(a)
    n = size // 2 if embedded else size
    sums = power_sums_from_hermitian(a, 2 * n, embedded=embedded)
    return _report_from_sums(sums, coeffs_from_power_sums(sums))


# ---------------------------------------------------------------------------
# multiplicities from the inverse Hankel matrix


def _moment_row(x: Fraction, m: int) -> list[Fraction]:
    row, v = [], Fraction(1)
    for _ in range(m):
        row.append(v)
        v *= x
    return row


def _inverse_form(h, u: list[Fraction], v: list[Fraction]) -> Fraction:
    try:
        y = solve_exact(h, v)
    except ZeroDivisionError:
        raise SingularHankel("Hankel matrix is singular") from None
    return sum((a * b for a, b in zip(u, y)), Fraction(0))


def gram_orthogonality(p_i, p_j, h) -> Fraction:
    """<[1, p_i, ..., p_i^(m-1)] H^-1 [1, p_j, ..., p_j^(m-1)]^T>.

    At two exact distinct roots this is 0; at the same root it is 1/r.
    """
    m = len(h)
    return _inverse_form(h, _moment_row(as_rat(p_i), m), _moment_row(as_rat(p_j), m))


def multiplicity(
    enclosed_root: RootEnclosure,
    h,
    tol=Fraction(1, 1000),
    max_refinements: int = 200,
) -> int:
    """Multiplicity r of the root inside ``enclosed_root`` from 1/r = <p H^-1 p^T>.

    The quadratic form is evaluated at the midpoint of the enclosure, which
    is bisected until the value is within ``tol`` of 1/r for a positive
    integer r.
    """
    tol = as_rat(tol)
    encl = enclosed_root
    for _ in range(max_refinements):
        x = encl.mid
        val = gram_orthogonality(x, x, h)
        if val > 0:
            r = round(1 / val)
            if r >= 1 and abs(val - Fraction(1, r)) < tol:
                return r
        if encl.poly is None:
            break
        encl = encl.refine(encl.width / 2)
    raise MultiplicityUnresolved(f"no integer multiplicity within {fmt_rat(tol)} near {float(encl.mid)}")
