from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from innerbody.exactnum import (
    NotPythagorean,
    norm_exact,
    norm_squared,
    primitive_direction,
    rat_parse,
    rat_str,
    to_integer_points,
)

ints = st.integers(-10**6, 10**6)
vec3 = st.tuples(ints, ints, ints).filter(any)
fractions = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize(
    "text, expected",
    [("432", Fraction(432)), ("10/3", Fraction(10, 3)), (" -7 / 14 ", Fraction(-1, 2)), ("+5", Fraction(5))],
)
def test_rat_parse_literals(text, expected):
    assert rat_parse(text) == expected


def test_rat_parse_reduces_by_gcd():
    value = rat_parse("24/36")
    g = gcd(24, 36)
    assert (value.numerator, value.denominator) == (24 // g, 36 // g) == (2, 3)


@pytest.mark.parametrize("text", ["", "1.5", "a/b", "1/", "/3", "1/-2", "3 4"])
def test_rat_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        rat_parse(text)


def test_rat_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_parse("1/0")


@given(fractions)
def test_rat_str_round_trip(x):
    assert rat_parse(rat_str(x)) == x


@given(fractions, fractions)
def test_rational_arithmetic_is_exact(a, b):
    assert (a + b) - b == a


@pytest.mark.parametrize("v, n", [((12, 0, 35), 37), ((0, 12, 5), 13), ((0, 0, -1), 1), ((3, 4), 5)])
def test_norm_exact_values(v, n):
    assert norm_exact(v) == n


def test_norm_exact_not_pythagorean():
    with pytest.raises(NotPythagorean):
        norm_exact((1, 1, 1))


def test_norm_exact_zero_vector():
    with pytest.raises(ValueError):
        norm_exact((0, 0, 0))


@given(vec3)
def test_norm_exact_squares_back(v):
    try:
        n = norm_exact(v)
    except NotPythagorean:
        return
    assert n * n == norm_squared(v)


@pytest.mark.parametrize(
    "v, expected", [((24, 0, 70), (12, 0, 35)), ((0, 0, -3), (0, 0, -1)), ((-4, 2), (-2, 1))]
)
def test_primitive_direction_values(v, expected):
    assert primitive_direction(v) == expected


@given(vec3, st.integers(1, 1000))
def test_primitive_direction_idempotent_and_scale_invariant(v, k):
    p = primitive_direction(v)
    assert primitive_direction(p) == p
    assert primitive_direction(tuple(k * c for c in v)) == p
    assert all((a > 0) == (b > 0) and (a < 0) == (b < 0) for a, b in zip(p, v))


def test_primitive_direction_zero_vector():
    with pytest.raises(ValueError):
        primitive_direction((0, 0))


def test_to_integer_points_uses_common_denominator():
    pts, D = to_integer_points([(Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(-5, 6))])
    assert D == 6
    assert pts == [(3, 2), (12, -5)]
