"""Independent ground truth used to check every other module.

Sturm-sequence isolation of real roots into rational intervals, brute-force
pairwise gaps over those intervals, and multiplicities from the gcd chain
p, gcd(p, p'), ...  Nothing in here touches Hankel matrices or the gap
recurrences; it depends only on the polynomial kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TooFewRoots, ZeroPolynomial
from .polyarith import Poly, derivative, divmod_poly, evaluate, gcd, square_free_part
from .rational import as_rat


def sturm_sequence(p: Poly) -> list[Poly]:
    f = square_free_part(p)
    seq = [f, derivative(f)]
    while not seq[-1].is_zero():
        seq.append(-divmod_poly(seq[-2], seq[-1])[1])
    return seq[:-1]


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _changes_at(seq: list[Poly], x: Fraction) -> int:
    return _sign_changes(evaluate(q, x) for q in seq)


def _changes_at_infinity(seq: list[Poly], positive: bool) -> int:
    vals = []
    for q in seq:
        s = q.lc
        if not positive and q.degree % 2 == 1:
            s = -s
        vals.append(s)
    return _sign_changes(vals)


def sturm_count(seq: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots in the half-open interval (lo, hi]."""
    return _changes_at(seq, lo) - _changes_at(seq, hi)


def count_real_roots(p: Poly) -> int:
    seq = sturm_sequence(p)
    return _changes_at_infinity(seq, False) - _changes_at_infinity(seq, True)


def cauchy_bound(p: Poly) -> Fraction:
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / abs(p.lc) if p.degree > 0 else Fraction(1)


@dataclass(frozen=True)
class RootEnclosure:
    """Half-open interval (lo, hi] holding exactly one distinct root of ``poly``."""

    lo: Fraction
    hi: Fraction
    sign_change_count: int = 1
    poly: Poly | None = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = as_rat(x)
        return self.lo < x <= self.hi

    def refine(self, width) -> "RootEnclosure":
        """Bisect until the interval is no wider than ``width``."""
        width = as_rat(width)
        if self.poly is None:
            raise ValueError("enclosure carries no polynomial to refine against")
        seq = sturm_sequence(self.poly)
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            mid = (lo + hi) / 2
            if sturm_count(seq, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return RootEnclosure(lo, hi, 1, self.poly)


def isolate_real_roots(p: Poly, width=Fraction(1, 1000)) -> list[RootEnclosure]:
    """Sorted disjoint enclosures, one per distinct real root of p."""
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    width = as_rat(width)
    f = square_free_part(p)
    if f.degree < 1:
        return []
    seq = sturm_sequence(f)
    bound = cauchy_bound(f)
    out: list[RootEnclosure] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(seq, lo, hi)
        if n == 0:
            continue
        if n == 1 and hi - lo <= width:
            out.append(RootEnclosure(lo, hi, 1, f))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort(key=lambda e: e.lo)
    return out


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def contains(self, x) -> bool:
        x = as_rat(x)
        return self.lo <= x <= self.hi


def brute_force_gaps(encl: list[RootEnclosure]) -> tuple[Interval, Interval]:
    """Intervals certain to contain the minimal and maximal root gap."""
    if len(encl) < 2:
        raise TooFewRoots("need at least two roots for a gap")
    encl = sorted(encl, key=lambda e: e.lo)
    pairs = list(zip(encl, encl[1:]))
    min_gap = Interval(
        max(Fraction(0), min(b.lo - a.hi for a, b in pairs)),
        min(b.hi - a.lo for a, b in pairs),
    )
    first, last = encl[0], encl[-1]
    max_gap = Interval(last.lo - first.hi, last.hi - first.lo)
    return min_gap, max_gap


def multiplicities_via_gcd(p: Poly, width=Fraction(1, 1000)) -> list[tuple[RootEnclosure, int]]:
    """Multiplicity of each distinct real root from the chain p, gcd(p,p'), ...

    A root of multiplicity r survives in exactly r links of the chain.
    """
    chain = [p]
    while chain[-1].degree > 0:
        chain.append(gcd(chain[-1], derivative(chain[-1])))
    chain = [c for c in chain if c.degree > 0]
    encl = isolate_real_roots(p, width)
    seqs = [sturm_sequence(c) for c in chain]
    out = []
    for e in encl:
        r = sum(1 for seq in seqs if sturm_count(seq, e.lo, e.hi) == 1)
        out.append((e, r))
    return out
