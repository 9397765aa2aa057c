"""Acceptance checks, one test per criterion.

Each test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints them
in the terminal summary.  Running this file directly prints them as well.
"""

import itertools
import time
from fractions import Fraction

import pytest

from markov_spectra.cfcore import MarkedWord
from markov_spectra.certify import interleaving_report, thresholds, verify_all, verify_lemma
from markov_spectra.search import category_a, local_uniqueness, replication_check
from markov_spectra.spectra import (
    LIMIT,
    ExtremalKind,
    lambda0_gamma1,
    lambda0_theta_omega,
    lambda_extremal,
    lambda_minus,
    lambda_plus,
    make_gamma1,
    markov_value,
    theta_omega,
)
from markov_spectra.surd import QuadSurd, eval_cf, to_decimal

RESULTS: dict[int, str] = {}


class _Recorder:
    def __init__(self, n):
        self.n, self.detail, self.t0 = n, "", time.perf_counter()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        secs = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        why = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}"
        line = f"ACCEPTANCE {self.n}: {status} ({secs:.2f}s) {why}".rstrip()
        RESULTS[self.n] = line
        print(line)
        return False


def test_1_limit_value():
    with _Recorder(1) as r:
        v = eval_cf((2,), "2") + eval_cf((0, 1), "2")
        assert to_decimal(v, 8) == "3.12132034"
        assert v == QuadSurd(2, 3, 2, 2) == LIMIT
        r.detail = f"value {to_decimal(v, 8)}"


def _float_cf(letters, period):
    x = 0.0
    for a in reversed(tuple(letters) + tuple(period) * 30):
        x = a + (1.0 / x if x else 0.0)
    return x


def _oracle(u: MarkedWord, kind: ExtremalKind, depth: int = 12):
    """Extremal lambda_0 over every depth-letter completion of both sides.

    Floats locate the candidates; the winner is then chosen exactly.
    """
    pick = min if kind is ExtremalKind.MIN else max
    fwd = tuple(u.at(t) for t in range(0, u.right + 1))
    bwd = (0,) + tuple(u.at(t) for t in range(-1, -u.left - 1, -1))
    total = 0
    for head in (fwd, bwd):
        cands = [(head + ext, tail) for ext in itertools.product((1, 2), repeat=depth)
                 for tail in ((1, 2), (2, 1))]
        vals = [_float_cf(h[1:], t) for h, t in cands]
        vals = [h[0] + (1 / v) for (h, _), v in zip(cands, vals)]
        best = pick(vals)
        close = [c for c, v in zip(cands, vals) if abs(v - best) < 1e-9]
        total = total + pick(eval_cf(h, " ".join(map(str, t))) for h, t in close)
    return total


def test_2_gate_constants():
    with _Recorder(2) as r:
        lo, hi = lambda_minus("1 2* 1"), lambda_plus("1 1 2* 2")
        assert lo > Fraction(3154, 1000)
        assert hi < Fraction(3057, 1000)
        assert lo == 2 + QuadSurd(0, 2, 3, 3)
        assert lo == _oracle(MarkedWord.parse("1 2* 1"), ExtremalKind.MIN)
        assert hi == _oracle(MarkedWord.parse("1 1 2* 2"), ExtremalKind.MAX)
        assert hi == lambda_extremal(MarkedWord.parse("1 1 2* 2"), 0, ExtremalKind.MAX)
        r.detail = f"lower {to_decimal(lo, 6)} > 3.154, upper {to_decimal(hi, 6)} < 3.057"


def test_3_interleaving_chain():
    with _Recorder(3) as r:
        rows = interleaving_report(3, 10)
        assert [row.k for row in rows] == list(range(3, 11))
        for row in rows:
            assert row.m_theta_omega < row.m_gamma < row.m_theta_omega_prev
            assert row.decreasing and row.gap > 0
        assert all(b.gap < a.gap for a, b in zip(rows, rows[1:]))
        r.detail = f"k=3..10, last gap {float(rows[-1].gap):.3e}"


def test_4_witness_position():
    with _Recorder(4) as r:
        for k in range(3, 9):
            for word, exact in ((theta_omega(k), lambda0_theta_omega(k)),
                                (make_gamma1(k), lambda0_gamma1(k))):
                v, wit = markov_value(word)
                assert wit == 0 and v == exact, k
        r.detail = "witness 0 for k=3..8"


def test_5_lemma_registry():
    with _Recorder(5) as r:
        reports = verify_all(4, 10)
        ran = [x for x in reports if not x.skipped]
        bad = [(x.id, x.k) for x in ran if not x.passed or x.margin is None or not x.margin > 0]
        assert ran and not bad, bad
        named = {("L.U2", "X"): Fraction(62, 100), ("l.Ck-1", "X"): Fraction(11225, 100),
                 ("l.Ck-1", "ratio"): Fraction(108, 100), ("t2-3-i", "ratio"): Fraction(299, 10)}
        for k in range(4, 11):
            for (lid, name), bound in named.items():
                checks = {c.name: c for c in verify_lemma(lid, k).constant_checks}
                assert checks[name].bound == bound and checks[name].satisfied, (lid, name, k)
        r.detail = f"{len(ran)} checks passed, named constants satisfied"


def test_6_thresholds():
    with _Recorder(6) as r:
        for k in range(4, 9):
            t = thresholds(k)
            g = lambda0_gamma1(k)
            assert all(v > g for v in t.values().values())
            assert t.lambda_final < lambda0_theta_omega(k - 1)
            assert t.lambda_final == min(t.lambda_1, t.mu_1, t.nu_1)
        r.detail = "k=4..8"


def _lu(k, depth):
    v = local_uniqueness(k, depth)
    a = category_a(k)
    assert v.exhausted and v.passed and v.node_count <= 10 ** 7
    assert v.surviving_patterns
    assert all(w.contains_at(a) or w.contains_at(a.transpose()) for w in v.surviving_patterns)
    return v.node_count


def test_7_local_uniqueness():
    with _Recorder(7) as r:
        counts = [_lu(3, 18), _lu(4, 22)]
        r.detail = f"nodes k=3: {counts[0]}, k=4: {counts[1]}"


def test_8_replication():
    with _Recorder(8) as r:
        k = 4
        v = replication_check(k, 48)
        assert v.exhausted and v.passed and v.surviving_patterns
        periodic = theta_omega(k)
        for w in v.surviving_patterns:
            for i in range(-w.left, w.right + 1):
                assert w.at(i) == periodic.at(i), i
        r.detail = f"{len(v.surviving_patterns)} survivor(s), all agree with theta(omega_4)"


def _count_examples(test, *args):
    inner = test.hypothesis.inner_test
    seen = [0]

    def counted(*a, **kw):
        out = inner(*a, **kw)
        seen[0] += 1
        return out

    test.hypothesis.inner_test = counted
    try:
        test(*args)
    finally:
        test.hypothesis.inner_test = inner
    return seen[0]


def test_9_property_suites():
    from concurrent.futures import ProcessPoolExecutor

    import test_properties as tp

    suites = [tp.test_euler_rule, tp.test_reversal_symmetry, tp.test_determinant_sign,
              tp.test_lemma_bi_bounds, tp.test_lambda_envelope, tp.test_greedy_tail_optimality,
              tp.test_pruning_soundness]
    with _Recorder(9) as r:
        counts = {t.__name__: _count_examples(t) for t in suites}
        with ProcessPoolExecutor(max_workers=2) as pool:
            counts["determinism"] = _count_examples(tp.test_depth_and_worker_determinism, pool)
        short = {n: c for n, c in counts.items() if c < 500}
        assert not short, short
        r.detail = f"{len(counts)} suites, min {min(counts.values())} cases"


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
