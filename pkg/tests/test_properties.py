"""Randomised property suites (500 cases each)."""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from markov_spectra.cfcore import MarkedWord, Word, continuant, mobius_of_prefix
from markov_spectra.certify import lambda_1
from markov_spectra.search import admissible_windows, prune_reason
from markov_spectra.spectra import (
    BiWord,
    ExtremalKind,
    _tail_for,
    lambda0_theta_omega,
    lambda_at,
    lambda_minus,
    lambda_plus,
)
from markov_spectra.surd import TailSpec, eval_cf

CASES = settings(max_examples=500, deadline=None, derandomize=True,
                 suppress_health_check=[HealthCheck.too_slow])

letters = st.sampled_from((1, 2))
words = st.lists(letters, min_size=0, max_size=30).map(tuple)
periods = st.lists(letters, min_size=1, max_size=4).map(tuple)


@st.composite
def marked(draw, max_side=6):
    left = draw(st.lists(letters, max_size=max_side))
    right = draw(st.lists(letters, max_size=max_side))
    return MarkedWord(Word(tuple(left) + (draw(letters),) + tuple(right)), len(left))


def q(*parts):
    return continuant(sum(parts, ()))


@CASES
@given(w=st.lists(letters, min_size=2, max_size=40).map(tuple), data=st.data())
def test_euler_rule(w, data):
    m = data.draw(st.integers(1, len(w) - 1))
    assert q(w) == q(w[:m]) * q(w[m:]) + q(w[:m - 1]) * q(w[m + 1:])


@CASES
@given(w=words)
def test_reversal_symmetry(w):
    assert continuant(w) == continuant(w[::-1])


@CASES
@given(w=words)
def test_determinant_sign(w):
    assert mobius_of_prefix(w).determinant == (-1) ** len(w)


@CASES
@given(a=words)
def test_lemma_bi_bounds(a):
    t = Fraction(q(a, (2,)))
    if len(a) >= 2:  # a = "1" is the equality case
        assert t / 3 < q(a) < t / 2
        assert 4 * t / 3 < q(a, (2, 1)) < 3 * t / 2
    t4 = Fraction(q(a, (2,) * 4))
    assert 7 * t4 / 17 < q(a, (2,) * 3) < 5 * t4 / 12
    assert 24 * t4 / 17 < q(a, (2,) * 4, (1,)) < 17 * t4 / 12


@CASES
@given(u=marked(), ext_l=words.map(lambda w: w[:8]), ext_r=words.map(lambda w: w[:8]),
       pl=periods, pr=periods)
def test_lambda_envelope(u, ext_l, ext_r, pl, pr):
    lo, hi = lambda_minus(u), lambda_plus(u)
    w = BiWord(TailSpec(Word(pl)), u.extend(ext_l, ext_r), TailSpec(Word(pr)))
    assert lo <= lambda_at(w, 0) <= hi


def _side_value(head, tail_letters):
    return eval_cf(head + tail_letters[:-2], TailSpec(Word(tail_letters[-2:])))


@CASES
@given(u=marked(), kind=st.sampled_from(list(ExtremalKind)), side=st.sampled_from("fb"),
       j=st.integers(0, 19))
def test_greedy_tail_optimality(u, kind, side, j):
    if side == "f":
        head = tuple(u.at(t) for t in range(0, u.right + 1))
    else:
        head = (0,) + tuple(u.at(t) for t in range(-1, -u.left - 1, -1))
    tail = _tail_for(len(head), kind).period.letters
    expanded = tail * 12  # 24 letters, even, so the phase is preserved
    best = _side_value(head, expanded)
    flipped = list(expanded)
    flipped[j] = 3 - flipped[j]
    other = _side_value(head, tuple(flipped))
    if kind is ExtremalKind.MIN:
        assert other > best
    else:
        assert other < best


K4_LO = lambda0_theta_omega(4)
K4_HI = lambda_1(4)


@CASES
@given(u=marked(max_side=5), ext_l=words.map(lambda w: w[:6]),
       ext_r=words.map(lambda w: w[:6]), pl=periods, pr=periods)
def test_pruning_soundness(u, ext_l, ext_r, pl, pr):
    why = prune_reason(u, K4_LO, K4_HI)
    if why is None:
        return
    rule, i = why
    w = BiWord(TailSpec(Word(pl)), u.extend(ext_l, ext_r), TailSpec(Word(pr)))
    if rule == "avoided":
        assert lambda_at(w, 0) <= K4_LO
    else:
        assert lambda_at(w, i) >= K4_HI


@pytest.fixture(scope="module")
def pool():
    with ProcessPoolExecutor(max_workers=2) as ex:
        yield ex


@settings(max_examples=500, deadline=None, derandomize=True,
          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
@given(k=st.sampled_from((3, 4)), depth=st.integers(1, 8), slack=st.integers(0, 40000))
def test_depth_and_worker_determinism(pool, k, depth, slack):
    lo = lambda0_theta_omega(k)
    hi = lambda_1(k) + Fraction(slack, 10 ** 6)
    serial = admissible_windows(k, lo, hi, depth)
    assert admissible_windows(k, lo, hi, depth) == serial
    assert admissible_windows(k, lo, hi, depth, executor=pool) == serial
    if depth > 1:
        shallower = admissible_windows(k, lo, hi, depth - 1)
        cut = {w.letters[w.mark - depth + 1:w.mark + depth] for w in serial.surviving_patterns}
        assert cut <= {w.letters for w in shallower.surviving_patterns}
