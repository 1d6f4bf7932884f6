import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import strategies as st

from hankelgap.polyarith import Poly, poly_from_roots


def brute_pair_sum(roots, t):
    return sum(F(1) / ((a - b) ** 2 - t) for a, b in combinations(roots, 2))


def expand_roots(roots):
    """Independent expansion through sympy, returned as ascending Fractions."""
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Integer(1)
    for r in roots:
        expr *= x - sympy.Rational(F(r).numerator, F(r).denominator)
    coeffs = sympy.Poly(sympy.expand(expr), x).all_coeffs()[::-1]
    return Poly(F(int(c.p), int(c.q)) for c in coeffs)


@st.composite
def integer_rooted(draw, max_degree=8, max_mult=3, lo=-20, hi=20, min_distinct=1):
    k = draw(st.integers(min_distinct, max_degree))
    roots = draw(st.lists(st.integers(lo, hi), min_size=k, max_size=k, unique=True))
    mults = []
    budget = max_degree
    for i in range(len(roots)):
        left = len(roots) - i - 1
        mults.append(draw(st.integers(1, max(1, min(max_mult, budget - left)))))
        budget -= mults[-1]
    return roots, mults


@st.composite
def simple_integer_rooted(draw, min_degree=3, max_degree=7, lo=-20, hi=20):
    k = draw(st.integers(min_degree, max_degree))
    return sorted(draw(st.lists(st.integers(lo, hi), min_size=k, max_size=k, unique=True)))


def random_multi_rooted(rng: random.Random, max_degree=8, max_mult=3):
    k = rng.randint(1, max_degree)
    roots = rng.sample(range(-20, 21), k)
    mults, budget = [], max_degree
    for i in range(k):
        left = k - i - 1
        mults.append(rng.randint(1, max(1, min(max_mult, budget - left))))
        budget -= mults[-1]
    return roots, mults


def random_simple_rooted(rng: random.Random, min_degree=3, max_degree=7):
    return sorted(rng.sample(range(-20, 21), rng.randint(min_degree, max_degree)))


@pytest.fixture
def cubic():
    # x^3 - 4x^2 + 3x, roots 0, 1, 3
    return Poly([0, 3, -4, 1])


@pytest.fixture
def double_root_cubic():
    # (x-1)^2 (x-2)
    return poly_from_roots([1, 2], [2, 1])


# acceptance criteria outcomes, reported once at the end of the run
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
