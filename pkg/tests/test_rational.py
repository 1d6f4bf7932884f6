from fractions import Fraction as F
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hankelgap.errors import NegativeRadicand
from hankelgap.rational import (
    as_rat,
    bareiss_det,
    exact_sqrt,
    fmt_rat,
    round_down,
    round_up,
    sqrt_lower,
    sqrt_upper,
)

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


def cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(len(m)))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.fractions(-20, 20, max_denominator=7), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor_expansion(m):
    assert bareiss_det(m) == cofactor_det(m)


def test_bareiss_needs_pivoting():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [1, 0]]) == 0


@given(fractions, st.integers(1, 60))
def test_directed_rounding_is_tightest(x, cap):
    lo, hi = round_down(x, cap), round_up(x, cap)
    assert lo <= x <= hi
    assert lo.denominator <= cap and hi.denominator <= cap
    # brute force over all denominators up to cap
    for q in range(1, cap + 1):
        below = F((x.numerator * q) // x.denominator, q)
        above = below if below == x else below + F(1, q)
        assert below <= lo
        assert above >= hi


def test_rounding_noop_for_small_denominators():
    assert round_down(F(3, 7), 100) == F(3, 7)
    assert round_up(F(3, 7), None) == F(3, 7)


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**6),
       st.sampled_from([F(1, 10), F(1, 10**6), F(1, 2**40)]))
def test_sqrt_bounds_contract(x, prec):
    u, lo = sqrt_upper(x, prec), sqrt_lower(x, prec)
    assert lo * lo <= x <= u * u
    assert u * u - x <= prec * x
    assert x - lo * lo <= prec * x


def test_sqrt_examples():
    assert sqrt_upper(4) == 2
    assert sqrt_upper(0) == 0
    assert sqrt_upper(F(9, 4)) == F(3, 2)
    u = sqrt_upper(2, F(1, 10**6))
    assert 2 <= u * u <= 2 * (1 + F(1, 10**6))
    with pytest.raises(NegativeRadicand):
        sqrt_upper(-1)
    assert exact_sqrt(F(2)) is None


def test_parsing_and_formatting():
    assert as_rat("3/4") == F(3, 4)
    assert as_rat("1e-9") == F(1, 10**9)
    assert fmt_rat(F(-4)) == "-4/1"
    with pytest.raises(TypeError):
        as_rat(0.5)
