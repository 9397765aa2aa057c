from fractions import Fraction

import pytest

from markov_spectra.cfcore import MarkedWord, Word
from markov_spectra.certify import lambda_1, thresholds, verify_lemma
from markov_spectra.search import (
    EmptyRange,
    WindowNode,
    admissible_windows,
    category_a,
    extension_check,
    local_uniqueness,
    prune_reason,
    replication_check,
    window_literal,
)
from markov_spectra.spectra import lambda0_gamma1, lambda0_theta_omega, lambda_minus


def _truncate(w: MarkedWord, d: int) -> tuple:
    return w.letters[w.mark - d:w.mark + d + 1]


def test_category_a_at_radius_12():
    k = 4
    v = admissible_windows(k, lambda0_theta_omega(k), lambda_1(k), 2 * k + 4)
    assert v.exhausted and v.surviving_patterns
    a = category_a(k)
    for w in v.surviving_patterns:
        assert w.contains_at(a) or w.contains_at(a.transpose()), window_literal(w)


def test_empty_range():
    with pytest.raises(EmptyRange):
        admissible_windows(4, lambda_1(4), lambda0_theta_omega(4), 5)
    with pytest.raises(EmptyRange):
        admissible_windows(4, Fraction(3), Fraction(3), 5)


def test_prohibition_pruning_below_gate():
    hi = Fraction(31547, 10000)
    assert hi < lambda_minus("1 2* 1")
    v = admissible_windows(4, lambda0_theta_omega(4), hi, 3)
    gate = MarkedWord.parse("1 2* 1")
    assert v.surviving_patterns
    assert not any(w.contains_at(gate) for w in v.surviving_patterns)


def test_transposition_closure():
    lo, hi = lambda0_theta_omega(4), lambda_1(4)
    seed = MarkedWord.parse("2 2 1 2* 2")
    a = admissible_windows(4, lo, hi, 10, seed=seed)
    b = admissible_windows(4, lo, hi, 10, seed=seed.transpose())
    # bounds only tighten as a window grows, so survival does not depend on growth order
    assert sorted(w.transpose().letters for w in a.surviving_patterns) == \
        sorted(w.letters for w in b.surviving_patterns)


def test_depth_monotonicity():
    lo, hi = lambda0_theta_omega(3), lambda_1(3)
    prev = None
    for d in range(4, 13):
        v = admissible_windows(3, lo, hi, d)
        cur = {_truncate(w, d) for w in v.surviving_patterns}
        if prev is not None:
            assert {_truncate(w, d - 1) for w in v.surviving_patterns} <= prev[1]
        prev = (d, cur)


def test_bound_monotonicity():
    u = MarkedWord.parse("2 1 2* 2")
    node = WindowNode.of(u)
    assert node.lo_bound <= node.hi_bound
    for left, right in (((1,), ()), ((), (2,)), ((2, 1), (1, 2))):
        child = WindowNode.of(u.extend(left, right))
        assert node.lo_bound <= child.lo_bound <= child.hi_bound <= node.hi_bound


def test_workers_do_not_change_verdict():
    a = local_uniqueness(4, 16)
    b = local_uniqueness(4, 16, workers=2)
    assert a == b


def test_budget_overflow_is_inconclusive():
    v = local_uniqueness(4, 22, budget=500)
    assert not v.exhausted and v.passed is None and v.node_count == 500
    again = local_uniqueness(4, 22, budget=500, workers=2)
    assert again == v


@pytest.mark.parametrize("k,depth", [(3, 14), (4, 14)])
def test_local_uniqueness_agrees_with_lemma_chain(k, depth):
    v = local_uniqueness(k, depth)
    assert v.passed
    assert verify_lemma("t.local-uniqueness", k).passed


def test_local_uniqueness_loose_gate_admits_category_b():
    k = 4
    v = local_uniqueness(k, 10, hi=Fraction(3155, 1000))
    assert v.exhausted and not v.passed

    def is_b(w):  # ... 1 2* 2_{2k-1} ...
        return w.right >= 2 * k - 1 and w.at(-1) == 1 and \
            all(w.at(i) == 2 for i in range(1, 2 * k))
    assert any(is_b(w) or is_b(w.transpose()) for w in v.nonconforming)


def test_extension_check():
    assert extension_check(4, 40).passed
    assert extension_check(4, 20, seed="1 2* 1").surviving_patterns == []


def test_replication_check_and_left_period():
    k = 4
    v = replication_check(k, 12 * k)
    assert v.passed and v.surviving_patterns
    periodic = Word.parse("2_7 1 2_8 1 2_9 1").letters * 3
    for w in v.surviving_patterns:
        left = w.letters[:w.mark]
        assert len(left) == 12 * k
        assert left == periodic[-len(left):]


def test_replication_needs_the_threshold():
    k = 4
    t = thresholds(k)
    wide = t.nu_1 + (t.nu_1 - lambda0_gamma1(k))
    v = replication_check(k, 12 * k, nu=wide)
    assert v.exhausted and v.nonconforming
    assert len(v.surviving_patterns) > len(replication_check(k, 12 * k).surviving_patterns)


def test_replication_mutated_seed():
    k = 4
    seed = MarkedWord.parse("2_{2k+1} 1 2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 "
                            "2_{2k+1} 1 2_{2k-1}", k)
    letters = list(seed.letters)
    letters[seed.mark + 3] = 1
    bad = MarkedWord(letters, seed.mark)
    v = replication_check(k, 40, seed=bad)
    assert not v.surviving_patterns or v.nonconforming


def test_prune_reasons():
    lo, hi = lambda0_theta_omega(4), lambda_1(4)
    assert prune_reason(MarkedWord.parse("1 2* 1"), lo, hi) == ("prohibited", 0)
    assert prune_reason(MarkedWord.parse("2 2* 2"), lo, hi) == ("avoided", 0)
    assert prune_reason(MarkedWord.parse("1 2 1 2* 2"), lo, hi) == ("prohibited", -2)
    assert prune_reason(category_a(4), lo, hi) is None


def test_verdict_record():
    v = local_uniqueness(3, 6)
    rec = v.to_record()
    assert rec["passed"] and rec["survivors"] == v.literals()
    for lit in rec["survivors"]:
        assert window_literal(MarkedWord.parse(lit)) == lit
