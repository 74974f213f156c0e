from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from cyclinv.exact_arith import CyclotomicField
from cyclinv.series import RationalSeries

polys = st.lists(st.integers(-3, 3), min_size=1, max_size=4)


@given(polys, polys.filter(lambda p: p[0] != 0))
def test_recurrence_matches_division(num, den):
    s = RationalSeries(tuple(num), tuple(den))
    assert s.coefficients(12) == s.coefficients_by_division(12)


@given(polys, polys.filter(lambda p: p[0] != 0), polys, polys.filter(lambda p: p[0] != 0))
def test_sum_coefficients(n1, d1, n2, d2):
    a, b = RationalSeries(tuple(n1), tuple(d1)), RationalSeries(tuple(n2), tuple(d2))
    total = (a + b).coefficients(10)
    assert total == [x + y for x, y in zip(a.coefficients(10), b.coefficients(10))]


@given(polys.filter(lambda p: p[0] != 0), polys.filter(lambda p: p[0] != 0))
def test_reciprocal(num, den):
    s = RationalSeries(tuple(num), tuple(den))
    one = RationalSeries((1,), (1,))
    prod = [sum(a * b for a, b in zip(s.coefficients(k + 1), reversed(s.reciprocal().coefficients(k + 1))))
            for k in range(8)]
    assert prod == one.coefficients(8)


def test_normalization_and_equality():
    s = RationalSeries((2, -4), (2, -6))
    assert s.denominator == (1, -3)
    assert s == RationalSeries((1, -2), (1, -3))
    assert RationalSeries((1, -1), (1, -2, 1)).reduced() == RationalSeries((1,), (1, -1))
    assert str(RationalSeries((1, -2), (1, -3))) == "(1 - 2*t)/(1 - 3*t)"
    with pytest.raises(ValueError):
        RationalSeries((1,), (0, 1))


def test_rationality_over_cyclotomic_field():
    fld = CyclotomicField(3)
    e = fld.e
    s = RationalSeries((1,), (1, -e), fld) + RationalSeries((1,), (1, -e * e), fld)
    assert s.is_rational()
    r = s.to_rational()
    assert r.coefficients(6) == [Fraction(c) for c in (2, -1, -1, 2, -1, -1)]


def test_json():
    s = RationalSeries((1, -2), (1, -3))
    assert s.to_json(4) == {"num": ["1", "-2"], "den": ["1", "-3"], "coeffs": ["1", "1", "3", "9"]}
