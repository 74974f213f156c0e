from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from cyclinv import upoly
from cyclinv.exact_arith import (
    QQ,
    CycNumber,
    CyclotomicField,
    DomainError,
    cyc_inv,
    cyclotomic_polynomial,
    euler_phi,
    field_from_tag,
    format_cyc,
    parse_cyc,
    primitive_root_power,
)
from strategies import cyc_numbers, orders


@pytest.mark.parametrize("d, poly", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial_small(d, poly):
    assert cyclotomic_polynomial(d) == poly


@pytest.mark.parametrize("d", range(1, 31))
def test_cyclotomic_product_is_x_to_the_d_minus_one(d):
    prod = (Fraction(1),)
    for k in range(1, d + 1):
        if d % k == 0:
            prod = upoly.mul(prod, cyclotomic_polynomial(k))
    assert prod == upoly.trim((-1,) + (0,) * (d - 1) + (1,))
    assert len(cyclotomic_polynomial(d)) - 1 == euler_phi(d)


@pytest.mark.parametrize("d", range(2, 13))
def test_root_of_unity_is_primitive(d):
    e = primitive_root_power(d, 1)
    assert e ** d == 1
    assert all(e ** k != 1 for k in range(1, d))
    assert sum((e ** k for k in range(d)), CycNumber(d)) == 0


@pytest.mark.parametrize("d", range(2, 9))
def test_negative_powers(d):
    e = primitive_root_power(d, 1)
    for k in range(-2 * d, 2 * d):
        assert primitive_root_power(d, k) == e ** (k % d)
        assert e ** k * e ** (-k) == 1


@given(st.data(), orders)
def test_field_axioms(data, d):
    a, b, c = (data.draw(cyc_numbers(d)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b
        assert cyc_inv(a) == 1 / a


@given(st.data(), orders)
def test_format_parse_roundtrip(data, d):
    a = data.draw(cyc_numbers(d))
    assert parse_cyc(format_cyc(a), d) == a


def test_format_examples():
    e = primitive_root_power(3, 1)
    assert format_cyc(1 - e + 2 * e * e) == "-1 - 3*e"  # e^2 = -1 - e
    assert format_cyc(CycNumber(5, (0, Fraction(1, 2)))) == "1/2*e"
    assert format_cyc(CycNumber(4)) == "0"


def test_rational_embedding_and_hash():
    x = CycNumber.rational(5, Fraction(3, 7))
    assert x.is_rational() and x.to_fraction() == Fraction(3, 7)
    assert x == Fraction(3, 7)
    assert hash(x) == hash(Fraction(3, 7))
    with pytest.raises(DomainError):
        primitive_root_power(5, 1).to_fraction()


def test_mixing_orders_fails():
    with pytest.raises(DomainError):
        primitive_root_power(3, 1) + primitive_root_power(4, 1)


def test_zero_inverse_fails():
    with pytest.raises(ZeroDivisionError):
        CycNumber(3).inverse()


def test_fields_and_tags():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("Q(e_3)") == CyclotomicField(3)
    assert field_from_tag("Qe5") == CyclotomicField(5)
    assert field_from_tag("Qe", 4) == CyclotomicField(4)
    with pytest.raises(ValueError):
        field_from_tag("Qe")
    with pytest.raises(ValueError):
        field_from_tag("R")
    f = CyclotomicField(3)
    assert f.tag == "Q(e_3)"
    assert f.parse(f.format(f.e)) == f.e
    with pytest.raises(DomainError):
        QQ(f.e)


def test_parser_rejects_code():
    with pytest.raises((ValueError, SyntaxError)):
        parse_cyc("__import__('os')", 3)
    with pytest.raises((ValueError, SyntaxError)):
        parse_cyc("x + 1", 3)


@given(st.lists(st.integers(-4, 4), max_size=5), st.lists(st.integers(-4, 4), max_size=5).filter(any))
def test_upoly_division(p, q):
    p, q = upoly.trim(p), upoly.trim(q)
    quo, rem = upoly.divmod_(p, q)
    assert upoly.add(upoly.mul(quo, q), rem) == p
    assert upoly.degree(rem) < upoly.degree(q)


@given(st.lists(st.integers(-4, 4), max_size=5).filter(any), st.lists(st.integers(-4, 4), max_size=5).filter(any))
def test_upoly_ext_gcd(p, q):
    p, q = upoly.trim(p), upoly.trim(q)
    g, s, t = upoly.ext_gcd(p, q)
    assert upoly.add(upoly.mul(s, p), upoly.mul(t, q)) == g
    assert not upoly.divmod_(p, g)[1] and not upoly.divmod_(q, g)[1]
