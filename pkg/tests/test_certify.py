from fractions import Fraction

import pytest

from markov_spectra.certify import (
    CF,
    REGISTRY,
    KOutOfRange,
    ThresholdCollapse,
    UnknownLemma,
    interleaving_report,
    threshold,
    thresholds,
    verify_all,
    verify_lemma,
)
from markov_spectra.spectra import lambda0_gamma1, lambda0_theta_omega
from markov_spectra.surd import QuadSurd, eval_cf

MANIFEST = [
    # local uniqueness
    "l.2-1", "p1", "t.local-uniqueness", "L.U1", "L.U2", "L.U3", "cL.U1-hypothesis",
    "cL.U1-instance", "L.U4", "bi-i", "bi-ii", "l.Ck-1", "L.U5", "bpodd", "l.Aoddeveniii",
    "ooe-i", "ooe-ii", "L.U6", "L.U7-i", "L.U7-ii", "L.U7-iii", "L.U7-iv", "L.U7-v",
    "l.Aoddodd", "p.3-1",
    # extension
    "LG1-i", "LG1-ii", "c.Ext1-0", "ext1-split", "ext1B1", "ext1B2-i", "ext1B2-ii", "ext1B3",
    "ext1B4", "e2.c.o", "ext1C-even", "ext1D-even", "g2k-2-i", "g2k-2-ii", "e2.d.o",
    "c.Ext1-1", "te2-3.1", "te2-3.2", "c.Ext2-0", "ext2-split", "Delta-i", "Delta-ii",
    "Delta-even", "e3.c.e", "ext2D-odd", "L.U3.17", "c.Ext2-1", "t2-3-i", "t2-3-ii",
    "c.Ext3-0", "ext3-split", "Omega-even", "e4.c.e", "L.U3.21", "c.Ext3-1", "t.extension",
    # replication
    "srl-i", "srl-ii", "crl1", "rep2", "rep3", "rep4", "crl2", "crl3", "crl4",
    "l.replicamento",
]


def test_manifest_complete():
    assert sorted(REGISTRY) == sorted(MANIFEST)
    assert len(MANIFEST) == 71


def test_verify_all_k3_runs_local_chain():
    reports = verify_all(3, 3)
    assert all(r.passed for r in reports)
    ran = {r.id for r in reports if not r.skipped}
    assert ran == {i for i in MANIFEST if REGISTRY[i].k_min == 3}


def test_verify_all_ordering_and_workers():
    serial = verify_all(4, 5, ids=["p1", "rep2", "L.U2"])
    assert [(r.id, r.k) for r in serial] == sorted((r.id, r.k) for r in serial)
    par = verify_all(4, 5, ids=["p1", "rep2", "L.U2"], workers=2)
    assert [r.to_record() for r in serial] == [r.to_record() for r in par]


def test_verify_all_errors():
    with pytest.raises(KOutOfRange):
        verify_all(2, 4)
    with pytest.raises(KOutOfRange):
        verify_all(5, 4)
    with pytest.raises(UnknownLemma):
        verify_all(4, 4, ids=["no-such-lemma"])


def test_p1_margin_over_gate():
    r = verify_lemma("p1", 4)
    assert r.passed and r.margin > 0
    assert r.main_inequality.rhs == Fraction(3154, 1000)


@pytest.mark.parametrize("lemma_id,old,new", [
    ("p1", "1 2* 1", "2 2* 2"),
    ("L.U2", "2_{2k-2}", "2_{2k}"),
    ("rep2", "2_{2k-2} 1 2_{2k}", "2_{2k} 1 2_{2k}"),
])
def test_mutated_words_fail(lemma_id, old, new):
    assert verify_lemma(lemma_id, 4).passed
    bad = verify_lemma(lemma_id, 4, rewrite=lambda s: s.replace(old, new, 1))
    assert not bad.passed and bad.failures()


def test_report_only_constants_are_flagged():
    r = verify_lemma("g2k-2-i", 5)
    assert r.passed
    misses = [c for c in r.constant_checks if not c.satisfied]
    assert misses and all(not c.applicable for c in misses)
    assert r.notes


def test_typo_notes_recorded():
    assert any("lambda^(11)" in n for n in verify_lemma("crl4", 4).notes)


def test_cf_literal():
    cf = CF.parse("[2; 2_{2k-2} 1 | 12]", 3)
    assert cf.value == eval_cf((2,) + (2,) * 4 + (1,), "1 2")
    assert CF.parse("[0; 1 | 2]").value == QuadSurd(0, 1, 2, 2)


def test_thresholds_above_gamma():
    for k in (4, 5):
        t = thresholds(k)
        g = lambda0_gamma1(k)
        assert all(v > g for v in t.values().values())
        assert t.lambda_final < lambda0_theta_omega(k - 1)
        assert t.mu_1 == min(getattr(t, f"lambda_{i}") for i in range(2, 8))


def test_threshold_domain():
    assert threshold(1, 3) > lambda0_gamma1(3)
    with pytest.raises(ValueError):
        threshold(2, 3)
    with pytest.raises(ValueError):
        threshold(12, 4)
    with pytest.raises(ValueError):
        thresholds(3)
    assert issubclass(ThresholdCollapse, ArithmeticError)


def test_interleaving_rows():
    rows = interleaving_report(3, 6)
    assert [r.k for r in rows] == [3, 4, 5, 6]
    assert all(r.chain_holds and r.decreasing and r.gap > 0 for r in rows)
    with pytest.raises(ValueError):
        interleaving_report(2, 4)
