from fractions import Fraction

import pytest

from markov_spectra.surd import (
    MixedRadicand,
    QuadSurd,
    SurdParseError,
    SurdSum,
    TailSpec,
    add,
    compare,
    eval_cf,
    parse_surd,
    periodic_value,
    to_decimal,
)
from markov_spectra.cfcore import mobius_of_prefix

LIMIT = QuadSurd(2, 3, 2, 2)  # (2 + 3 sqrt 2) / 2


def test_periodic_values():
    assert periodic_value("2") == QuadSurd(1, 1, 1, 2)
    assert eval_cf((0,), "1 2") == QuadSurd(-1, 1, 1, 3)
    assert eval_cf((0,), "2 1") == QuadSurd(-1, 1, 2, 3)
    assert eval_cf((), TailSpec("1 2")) == periodic_value("1 2") == QuadSurd(1, 1, 2, 3)


def test_periodic_value_fixed_point():
    for period in ("2", "1 2", "2 1", "2 2 1", "1 1 2 2 2"):
        x = periodic_value(period)
        m = mobius_of_prefix(tuple(int(c) for c in period.split()))
        assert (m.p_cur * x + m.p_prev) / (m.q_cur * x + m.q_prev) == x


def test_eval_cf_limit_value():
    s = eval_cf((2,), "2") + eval_cf((0, 1), "2")
    assert s == LIMIT
    assert eval_cf((0, 1), "2") == QuadSurd(0, 1, 2, 2)
    assert to_decimal(s, 8) == "3.12132034"


def test_add():
    assert add(QuadSurd(1, 1, 1, 2), QuadSurd(-1, 1, 1, 2)) == QuadSurd(0, 2, 1, 2)
    assert add(QuadSurd(1, 1, 1, 2), QuadSurd(0, 1, 2, 2)) == LIMIT
    assert add(Fraction(2, 5), Fraction(3, 5)) == 1
    with pytest.raises(MixedRadicand):
        add(QuadSurd(0, 1, 1, 2), QuadSurd(0, 1, 1, 3))


def test_compare():
    assert compare(QuadSurd(1, 1, 1, 2), Fraction(5, 2)) == -1
    assert compare(LIMIT, Fraction(312132034, 10 ** 8)) == 1
    assert compare(LIMIT, LIMIT) == 0
    assert QuadSurd(1, 1, 1, 2) < Fraction(5, 2) < QuadSurd(1, 1, 1, 3) * 2


def test_mixed_radicand_comparison():
    a, b = QuadSurd(0, 1, 1, 2), QuadSurd(0, 1, 1, 3)
    assert a < b and b - a > 0
    assert (a + b) > Fraction(314, 100)


@pytest.mark.parametrize("x,digits,text", [(LIMIT, 8, "3.12132034"),
                                           (QuadSurd(-1, 1, 1, 2), 5, "0.41421"),
                                           (Fraction(1, 2), 3, "0.500"),
                                           (Fraction(-1, 8), 2, "-0.12"),
                                           (Fraction(3, 8), 2, "0.38")])
def test_to_decimal(x, digits, text):
    assert to_decimal(x, digits) == text


def test_canonical_form_unique():
    a = eval_cf((2, 1, 2), "1 2")
    b = eval_cf((2, 1, 2, 1), "2 1")
    assert a == b and str(a) == str(b)
    assert QuadSurd(2, 4, 2, 8) == QuadSurd(1, 4, 1, 2)
    assert str(QuadSurd(2, 4, 2, 8)) == str(QuadSurd(1, 4, 1, 2))


def test_parse_round_trip():
    for x in (LIMIT, QuadSurd(-1, 1, 2, 3), SurdSum(Fraction(1, 3)),
              QuadSurd(0, 1, 2, 2) + QuadSurd(0, 1, 1, 3)):
        assert parse_surd(str(x)) == x
    with pytest.raises(SurdParseError):
        parse_surd("1+")
