import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qhilbert import ContextMismatch, DivisionByZero, FieldContext, FieldElement, field_arith, field_pow, i_power
from qhilbert.field import format_rational, parse_rational

from conftest import field_elements

D5 = FieldContext(5)
I = D5.i
R5 = D5.sqrt_d


def test_norm_of_one_plus_i():
    assert field_arith(1 + I, 1 - I, "mul") == 2


def test_reciprocal_of_sqrt5():
    x = field_arith(D5.one, R5, "div")
    assert x.coords == (0, Fraction(1, 5), 0, 0)


def test_square_of_golden_conjugate():
    # (sqrt5 - 1)^2 = 6 - 2 sqrt5, divided by 4
    x = (R5 - 1) / 2
    assert field_arith(x, x, "mul").coords == (Fraction(3, 2), Fraction(-1, 2), 0, 0)


def test_field_pow_examples():
    assert field_pow(I, 4) == 1
    assert field_pow(FieldElement(D5, 2), -3) == Fraction(1, 8)
    s = I * (R5 - 1) / 2
    assert field_pow(s, 2) == -(3 - R5) / 2


@pytest.mark.parametrize("k, expected", [(0, 1), (-1, -I), (6, -1), (1, I), (7, -I), (-4, 1)])
def test_i_power(k, expected):
    assert i_power(k) == expected


def test_i_power_negative_is_minus_i_power():
    for k in range(-9, 10):
        assert i_power(-k) == (-I) ** k


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(D5.one, D5.zero, "div")
    with pytest.raises(DivisionByZero):
        field_pow(D5.zero, -1)
    assert field_pow(D5.zero, 0) == 1


def test_context_mismatch():
    r2 = FieldContext(2).sqrt_d
    with pytest.raises(ContextMismatch):
        r2 + R5
    with pytest.raises(ContextMismatch):
        r2 * R5


def test_gaussian_rationals_are_context_free():
    x = FieldElement(FieldContext(2), 1, 0, 3)
    y = FieldElement(FieldContext(7), 1, 0, 3)
    assert x == y and hash(x) == hash(y)
    z = x + R5
    assert z.d == 5 and z.coords == (1, 1, 3, 0)


@pytest.mark.parametrize("d", [0, 1, 4, 9, 16, -3])
def test_context_rejects_squares_and_small(d):
    with pytest.raises(ValueError):
        FieldContext(d)


def test_rational_equality_and_hash():
    x = FieldElement(D5, Fraction(3, 4))
    assert x == Fraction(3, 4) and hash(x) == hash(Fraction(3, 4))
    assert FieldElement(D5, 2) == 2 and hash(FieldElement(D5, 2)) == hash(2)
    assert x != I


def test_immutable():
    with pytest.raises(AttributeError):
        I.context = D5


def test_rational_text_round_trip():
    for text in ["0", "5", "-7/3", "12/4"]:
        assert parse_rational(format_rational(parse_rational(text))) == parse_rational(text)
    assert format_rational(Fraction(6, 4)) == "3/2"
    for bad in ["0.5", "1e3", "1/x", ""]:
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(field_elements())
def test_json_round_trip(x):
    assert FieldElement.from_json(x.to_json()) == x


@given(field_elements(), field_elements(), field_elements())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@given(field_elements(d=3))
def test_inverse(x):
    assume(not x.is_zero())
    assert x * (1 / x) == 1
    assert x.norm() > 0


@settings(max_examples=50)
@given(field_elements(d=2), st.integers(-10, 10), st.integers(-10, 10))
def test_power_law(x, j, k):
    assume(not x.is_zero())
    assert field_pow(x, j + k) == field_pow(x, j) * field_pow(x, k)


@given(field_elements(), field_elements())
def test_lowest_terms(x, y):
    for r in (x + y, x * y, x - y):
        nums = r._num
        assert math.gcd(*nums, r._den) == 1 and r._den > 0
        for c in r.coords:
            assert math.gcd(c.numerator, c.denominator) == 1


@given(field_elements())
def test_complex_embedding_matches(x):
    r = math.sqrt(5)
    z = complex(x)
    assert z.real == pytest.approx(float(x.a) + float(x.b) * r)
    assert z.imag == pytest.approx(float(x.c) + float(x.e) * r)


@settings(max_examples=50)
@given(field_elements(), field_elements())
def test_division_agrees_with_complex_floats(x, y):
    assume(not y.is_zero())
    q = complex(x / y)
    expected = complex(x) / complex(y)
    assert abs(q - expected) <= 1e-9 * max(1.0, abs(expected))
