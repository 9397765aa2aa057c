import itertools
from fractions import Fraction

import pytest

from markov_spectra.cfcore import MarkedWord, Word
from markov_spectra.spectra import (
    LIMIT,
    BiWord,
    ExtremalKind,
    KTooSmall,
    Verdict,
    classify,
    lambda0_gamma1,
    lambda0_theta_omega,
    lambda_at,
    lambda_extremal,
    lambda_minus,
    lambda_plus,
    make_alpha,
    make_gamma1,
    make_omega,
    markov_value,
    theta_omega,
)
from markov_spectra.surd import QuadSurd, eval_cf


def brute_extremum(u: MarkedWord, kind: str, depth: int = 12):
    """Best lambda_0 over all depth-letter completions of each side, with both
    period-2 tails appended (the two sides are independent)."""
    pick = min if kind == "min" else max
    fwd = tuple(u.at(t) for t in range(0, u.right + 1))
    bwd = (0,) + tuple(u.at(t) for t in range(-1, -u.left - 1, -1))
    best = []
    for head in (fwd, bwd):
        vals = [eval_cf(head + ext, tail)
                for ext in itertools.product((1, 2), repeat=depth)
                for tail in ("1 2", "2 1")]
        best.append(pick(vals))
    return best[0] + best[1]


def test_constant_word():
    w = BiWord.parse("per(2) | 2* | per(2)")
    for i in (-3, 0, 5):
        assert lambda_at(w, i) == QuadSurd(0, 2, 1, 2)
    v, wit = markov_value(w)
    assert v == QuadSurd(0, 2, 1, 2) and wit == 0


def test_gate_constants_exact():
    lo = lambda_minus("1 2* 1")
    assert lo == 2 + QuadSurd(0, 2, 3, 3)  # 2 + 2/sqrt 3
    assert lo > Fraction(3154, 1000)
    assert lambda_plus("1 1 2* 2") < Fraction(3057, 1000)
    assert lambda_plus("2 2* 2") < lambda_plus("1 1 2* 2")


@pytest.mark.parametrize("text,kind", [("1 2* 1", "min"), ("1 1 2* 2", "max"),
                                       ("2*", "min"), ("2*", "max"), ("1 2 2* 1", "min")])
def test_greedy_tails_match_brute_force(text, kind):
    u = MarkedWord.parse(text)
    assert lambda_extremal(u, 0, ExtremalKind(kind)) == brute_extremum(u, kind)


def test_omega_and_gamma():
    assert str(make_omega(3)) == "2_5 1 2_6 1 2_7 1"
    assert str(make_omega(2)) == "2_3 1 2_4 1 2_5 1"
    assert len(make_omega(4)) == 27
    with pytest.raises(KTooSmall):
        make_omega(1)
    g = make_gamma1(4)
    center = [g.at(i) for i in range(0, 60)]
    want = Word.parse("2 2_6 1 2_8 1 2_9 1 2_7 1 2_8 1 2_7 1 1").letters
    assert tuple(center[:len(want)]) == want


def test_family_chain_and_limit():
    prev_w, prev_g = None, None
    for k in range(3, 9):
        w, g = lambda0_theta_omega(k), lambda0_gamma1(k)
        assert w < g < lambda0_theta_omega(k - 1)
        assert LIMIT < w
        if prev_w is not None:
            assert w < prev_w and g < prev_g
        prev_w, prev_g = w, g


def test_gap_shrinks_geometrically():
    gaps = [lambda0_theta_omega(k) - LIMIT for k in range(3, 11)]
    for a, b in zip(gaps, gaps[1:]):
        assert b > 0 and a > 2 * b


def test_gamma_value_decimal_prefix():
    assert str(float(lambda_at(make_gamma1(4), 0))).startswith("3.12")


@pytest.mark.parametrize("k", range(3, 7))
def test_markov_witness_at_zero(k):
    v, wit = markov_value(theta_omega(k))
    assert wit == 0 and v == lambda0_theta_omega(k)
    v, wit = markov_value(make_gamma1(k))
    assert wit == 0 and v == lambda0_gamma1(k)


def test_markov_window_soundness():
    for k in (3, 4):
        base = markov_value(make_gamma1(k))
        wider = markov_value(make_gamma1(k), depth=80)
        assert (base.value, base.witness) == (wider.value, wider.witness)


def test_alpha_templates():
    assert str(make_alpha(4, 1)) == "1 2_9 1 2* 2_6 1"
    a1, a2 = make_alpha(4, 1), make_alpha(4, 2)
    assert a2.contains_at(a1)
    assert make_alpha(4, 3).contains_at(a2)
    assert make_alpha(4, 4).contains_at(make_alpha(4, 3))
    # alpha^4 as written letter by letter has 16k + 7 letters
    assert len(make_alpha(4, 4)) == 71
    with pytest.raises(KTooSmall):
        make_alpha(3, 4)


def test_classify_examples():
    c = classify("1 2* 1", 4)
    assert c.verdict is Verdict.PROHIBITED and c.witness_index == 0 and c.margin > 0
    assert classify("2 2* 2", 4).verdict is Verdict.AVOIDED
    assert classify("1 2_9 1 2* 2_6 1", 4).verdict is Verdict.NEUTRAL


def test_transpose_invariance():
    u = MarkedWord.parse("1 2_3 1 2* 2 1 1")
    assert lambda_minus(u) == lambda_minus(u.transpose())
    assert lambda_plus(u) == lambda_plus(u.transpose())
