from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ineqsimplex.rational import (Ordering, RationalParseError, lex_compare, rat_arith, rat_make,
                                  rat_parse, render, render_decimal)

rationals = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**12)


def is_canonical(x):
    from math import gcd
    return x.denominator > 0 and gcd(abs(x.numerator), x.denominator) == 1


@pytest.mark.parametrize("p,q,expected", [
    (4, 27, Fraction(4, 27)),
    (0, 5, Fraction(0, 1)),
    (6, -8, Fraction(-3, 4)),
])
def test_rat_make(p, q, expected):
    x = rat_make(p, q)
    assert x == expected
    assert (x.numerator, x.denominator) == (expected.numerator, expected.denominator)


def test_rat_make_zero_is_zero_over_one():
    z = rat_make(0, 5)
    assert (z.numerator, z.denominator) == (0, 1)


def test_rat_make_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_make(1, 0)


def test_rat_arith_examples():
    assert rat_arith("add", Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert rat_arith("mul", Fraction(375), Fraction(1, 8)) == Fraction(375, 8)
    assert rat_arith("sub", Fraction(1), Fraction(3)) == -2
    assert rat_arith("neg", Fraction(2, 3)) == Fraction(-2, 3)
    with pytest.raises(ZeroDivisionError):
        rat_arith("div", Fraction(1), Fraction(0))
    with pytest.raises(ValueError):
        rat_arith("pow", Fraction(1), Fraction(2))


@pytest.mark.parametrize("text,expected", [
    ("65/2", Fraction(65, 2)),
    ("3,125", Fraction(25, 8)),
    ("-0.5", Fraction(-1, 2)),
    ("0,148", Fraction(148, 1000)),
    ("-62,5", Fraction(-125, 2)),
    ("17", Fraction(17)),
    ("+3", Fraction(3)),
    (" -4/6 ", Fraction(-2, 3)),
    ("5.", Fraction(5)),
    (".25", Fraction(1, 4)),
])
def test_rat_parse(text, expected):
    assert rat_parse(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1.2.3", "1e5", "--1", "1/2/3", "0x10"])
def test_rat_parse_rejects(text):
    with pytest.raises(RationalParseError):
        rat_parse(text)


def test_lex_compare_examples():
    u = [Fraction(v) for v in (1, 0, -1, 1, 0, 0)]
    v = [Fraction(1), Fraction(1, 3), Fraction(0), Fraction(0), Fraction(1, 3), Fraction(0)]
    assert lex_compare(u, v) is Ordering.LESS
    assert lex_compare(u, u) is Ordering.EQUAL
    assert lex_compare([0, 0, 1], [0, 0, 0]) is Ordering.GREATER
    with pytest.raises(ValueError):
        lex_compare([1], [1, 2])


@pytest.mark.parametrize("value,places,sep,expected", [
    (Fraction(4, 27), 3, ".", "0.148"),
    (Fraction(4, 27), 3, ",", "0,148"),
    (Fraction(1, 27), 3, ".", "0.037"),
    (Fraction(-2, 27), 3, ".", "-0.074"),
    (Fraction(115, 2), 3, ",", "57,5"),
    (Fraction(-1, 3000), 3, ".", "0"),
    (Fraction(1, 2000), 3, ".", "0.001"),
    (Fraction(-1, 2000), 3, ".", "-0.001"),
    (Fraction(-3, 2000), 3, ".", "-0.002"),
    (Fraction(5), 3, ".", "5"),
    (Fraction(2, 3), 2, ",", "0,67"),
])
def test_render_decimal(value, places, sep, expected):
    assert render_decimal(value, places, sep) == expected


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == 0
    for op in ("add", "sub", "mul"):
        assert is_canonical(rat_arith(op, a, b))
    if b != 0:
        assert is_canonical(rat_arith("div", a, b))


@given(rationals)
def test_parse_render_roundtrip(x):
    assert rat_parse(render(x)) == x
    assert render(rat_parse(render(x))) == render(x)


vectors3 = st.lists(st.fractions(max_denominator=5).filter(lambda f: abs(f) < 5), min_size=3, max_size=3)


@given(vectors3, vectors3, vectors3)
def test_lex_compare_total_order(u, v, w):
    assert lex_compare(u, v) == -lex_compare(v, u)
    assert (lex_compare(u, v) is Ordering.EQUAL) == (u == v)
    if lex_compare(u, v) <= 0 and lex_compare(v, w) <= 0:
        assert lex_compare(u, w) <= 0
