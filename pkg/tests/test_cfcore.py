from fractions import Fraction

import pytest

from markov_spectra.cfcore import (
    EmptyWord,
    MarkedWord,
    MobiusMap,
    NoDifference,
    Word,
    WordError,
    beta,
    compare_by_first_difference,
    continuant,
    convergent,
    mobius_of_prefix,
    numerator,
)
from markov_spectra.surd import eval_cf


@pytest.mark.parametrize("text,q", [("", 1), ("2 1 2 2 2", 46), ("1 2_3", 17), ("2 2", 5),
                                    ("2", 2), ("1", 1)])
def test_continuant_values(text, q):
    assert continuant(Word.parse(text)) == q


def test_continuant_compact_literal():
    assert continuant(Word.parse("21222")) == 46
    assert continuant(Word.parse("1222")) == 17


@pytest.mark.parametrize("text,value", [("2", Fraction(1, 2)), ("2 2", Fraction(2, 5)),
                                        ("1 2", Fraction(2, 3))])
def test_convergent(text, value):
    assert convergent(text) == value
    assert convergent(text).denominator == continuant(Word.parse(text))


def test_empty_word_errors():
    with pytest.raises(EmptyWord):
        convergent("")
    with pytest.raises(EmptyWord):
        beta(Word(()))
    with pytest.raises(EmptyWord):
        numerator(())


def test_beta():
    assert beta("2 2") == Fraction(2, 5)
    assert beta("2") == Fraction(1, 2)
    assert beta("1 2 2") == convergent("2 2 1")


def test_mobius_identity_and_determinant():
    assert mobius_of_prefix(()) == MobiusMap(1, 0, 0, 1)
    m = mobius_of_prefix((2,))
    assert m.q_cur == 1 and m(Fraction(3)) == 2 + Fraction(1, 3)
    assert mobius_of_prefix((2, 2)).determinant == 1
    for w in ((0,), (0, 2), (0, 2, 2), (2, 1, 1, 2, 1)):
        assert mobius_of_prefix(w).determinant == (-1) ** len(w)


def test_mobius_reproduces_value():
    m = mobius_of_prefix((0, 1, 2, 2))
    x = eval_cf((), "2")
    assert eval_cf((0, 1, 2, 2), "2") == (m.p_cur * x + m.p_prev) / (m.q_cur * x + m.q_prev)


def test_compare_by_first_difference():
    assert compare_by_first_difference([0], 2, 1) == -1
    assert compare_by_first_difference([0, 1], 2, 1) == 1
    with pytest.raises(NoDifference):
        compare_by_first_difference([0], 2, 2)


def test_compare_by_first_difference_against_exact():
    prefix = (0, 2, 1, 2)
    a = eval_cf(prefix + (1,), "2")
    b = eval_cf(prefix + (2,), "2")
    assert compare_by_first_difference(prefix, 1, 2) == (1 if a > b else -1)


def test_word_literals():
    assert Word.parse("1 2_3").letters == (1, 2, 2, 2)
    assert Word.parse("2_{2k-1} 1", 3).letters == (2,) * 5 + (1,)
    with pytest.raises(WordError):
        Word.parse("2_{2k-1}")
    with pytest.raises(WordError):
        Word.parse("3")
    with pytest.raises(WordError):
        Word.parse("2* 1")


def test_marked_word():
    u = MarkedWord.parse("1 2_9 1 2* 2_6 1")
    assert (u.left, u.right) == (11, 7)
    assert u.at(0) == 2 and u.at(-1) == 1 and u.at(7) == 1
    assert u.transpose().at(-7) == 1
    assert u.contains_at(MarkedWord.parse("1 2* 2"))
    assert not u.contains_at(MarkedWord.parse("2 2* 2"))
    with pytest.raises(WordError):
        MarkedWord.parse("1 2")
    assert MarkedWord.parse("2*").extend((1,), (2,)) == MarkedWord.parse("1 2* 2")


def test_palindrome_numerators():
    w = Word.parse("1 2 2 1")
    assert w.is_palindrome()
    assert numerator(w) == numerator(w.reverse())
