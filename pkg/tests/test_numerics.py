from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorlab import (
    EQUAL,
    GREATER,
    LESS,
    InvalidInputError,
    ScalePower,
    cmp,
    format_rational,
    parse_rational,
    pow_scale,
    reduce,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=1000)
unit_rationals = st.fractions(min_value=F(1, 1000), max_value=F(999, 1000),
                              max_denominator=1000)


def test_reduce_examples():
    assert reduce(2, 6) == F(1, 3)
    assert reduce(-1, -3) == F(1, 3)
    assert reduce(0, 7) == F(0, 1)


def test_reduce_normalises_sign_and_terms():
    r = reduce(-4, -6)
    assert (r.numerator, r.denominator) == (2, 3)
    r = reduce(4, -6)
    assert (r.numerator, r.denominator) == (-2, 3)


def test_reduce_zero_denominator():
    with pytest.raises(InvalidInputError):
        reduce(1, 0)


def test_pow_scale_examples():
    assert pow_scale(F(1, 3), 2) == F(1, 9)
    assert pow_scale(F(1, 4), 0) == F(1)
    assert pow_scale(F(2, 5), 3) == F(8, 125)


@pytest.mark.parametrize("q", [F(0), F(1), F(3, 2), F(-1, 2)])
def test_pow_scale_domain(q):
    with pytest.raises(InvalidInputError):
        pow_scale(q, 2)


def test_pow_scale_negative_exponent():
    with pytest.raises(InvalidInputError):
        pow_scale(F(1, 3), -1)


def test_cmp_examples():
    assert cmp(F(1, 3), F(2, 6)) == EQUAL
    assert cmp(F(1, 3), F(2, 5)) == LESS
    # 4**-10 vs 3**-13, exact cross-multiplication
    assert cmp(F(1, 1048576), F(1, 1594323)) == GREATER


@given(a=rationals, b=rationals, c=rationals)
def test_cmp_transitive_antisymmetric(a, b, c):
    assert cmp(a, b) == -cmp(b, a)
    if cmp(a, b) <= 0 and cmp(b, c) <= 0:
        assert cmp(a, c) <= 0


@given(a=rationals, b=rationals, c=rationals)
def test_addition_associative_exactly(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(q=unit_rationals, j1=st.integers(0, 64), j2=st.integers(0, 64))
@settings(max_examples=50)
def test_pow_scale_additive_in_exponent(q, j1, j2):
    assert pow_scale(q, j1 + j2) == pow_scale(q, j1) * pow_scale(q, j2)


def test_parse_format_roundtrip():
    for text, value in [("1/3", F(1, 3)), ("-2/4", F(-1, 2)), ("7", F(7)), (" 3/9 ", F(1, 3))]:
        assert parse_rational(text) == value
    assert format_rational(F(2, 6)) == "1/3"
    assert format_rational(F(5)) == "5"
    assert parse_rational(format_rational(F(-7, 3))) == F(-7, 3)


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(InvalidInputError):
        parse_rational(bad)


def test_scale_power():
    sp = ScalePower(F(1, 4), 5)
    assert sp.value() == F(1, 1024)
    with pytest.raises(InvalidInputError):
        ScalePower(F(3, 2), 1)
    with pytest.raises(InvalidInputError):
        ScalePower(F(1, 4), -1)
