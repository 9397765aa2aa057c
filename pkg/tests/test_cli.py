import csv
import io
import json

import pytest

from markov_spectra.certify import verify_all
from markov_spectra.cli import main
from markov_spectra.report import read_jsonl, write_csv, write_jsonl
from markov_spectra.surd import parse_surd


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_markov_constant_word(capsys):
    code, out, _ = run(capsys, "markov", "per(2) | 2* | per(2)")
    assert code == 0
    assert out.startswith("2√2 ≈ 2.828427")
    assert "witness 0" in out


def test_value(capsys):
    code, out, _ = run(capsys, "value", "per(2) | 2* 1 | per(2)", "--at", "1", "--digits", "5")
    assert code == 0 and out.startswith("lambda_1 = ")
    exact = out.split(" = ", 1)[1].split(" ≈ ")[0]
    parse_surd(exact)


def test_lemma_p1(capsys):
    code, out, _ = run(capsys, "lemma", "--id", "p1", "--k", "4")
    assert code == 0
    assert "PASS p1 k=4" in out and "3.154" in out and "margin" in out


def test_lemma_range_and_all(capsys):
    code, out, _ = run(capsys, "lemma", "--id", "rep2", "--k-range", "3..5")
    assert code == 0 and "SKIP rep2 k=3" in out and "PASS rep2 k=5" in out
    code, out, _ = run(capsys, "lemma", "--all", "--k", "4")
    assert code == 0 and out.strip().endswith("71/71 passed")


def test_interleave(capsys):
    code, out, _ = run(capsys, "interleave", "--k-range", "3..8")
    assert code == 0
    assert out.count("[ok]") == 6 and "gap to limit" in out


def test_thresholds(capsys):
    code, out, _ = run(capsys, "thresholds", "--k", "4", "--digits", "12")
    assert code == 0 and "lambda_final" in out and "nu_1" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "1 2* 1", "--k", "4")
    assert code == 0 and out.startswith("Prohibited at index 0")


def test_search(capsys):
    code, out, _ = run(capsys, "search", "local-uniqueness", "--k", "3", "--depth", "10")
    assert code == 0 and "passed=True" in out and "exhausted=True" in out


def test_search_budget_exhaustion_fails(capsys):
    code, out, _ = run(capsys, "search", "local-uniqueness", "--k", "4", "--depth", "22",
                       "--budget", "100")
    assert code == 1 and "exhausted=False" in out


@pytest.mark.parametrize("argv", [
    ["classify", "2_{2k} 2*"],                          # missing --k
    ["classify", "2_{2k} 2*", "--k", "x"],
    ["value", "per(2) | 2_{2k}* | per(2)"],              # parametric without --k
    ["markov", "2 2* 2"],                               # not a bi-word literal
    ["lemma", "--id", "no-such", "--k", "4"],
    ["lemma", "--id", "p1"],                            # no k given
    ["interleave", "--k-range", "5..3"],
    ["search", "extension", "--k", "3", "--depth", "5"],
    ["frobnicate"],
])
def test_bad_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_report_files(tmp_path, capsys):
    path = tmp_path / "r.jsonl"
    code, _, err = run(capsys, "report", "--format", "json", "--out", str(path),
                       "--k-range", "4..4")
    assert code == 0 and "71 records, 0 failed" in err
    with open(path, encoding="utf-8") as fh:
        recs = read_jsonl(fh)
    assert len(recs) == 71 and all(r["passed"] for r in recs)
    for r in recs:
        if r["margin"] is not None:
            assert parse_surd(r["margin"]) > 0
            assert len(r["margin_decimal"].split(".")[1]) == 30
    csv_path = tmp_path / "r.csv"
    assert main(["report", "--format", "csv", "--out", str(csv_path), "--k-range", "4..4"]) == 0
    with open(csv_path, encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    assert [(r["id"], int(r["k"])) for r in rows] == [(r["id"], r["k"]) for r in recs]


def test_report_writers_round_trip():
    reports = verify_all(4, 4, ids=["p1", "crl4"])
    buf = io.StringIO()
    assert write_jsonl(reports, buf) == 2
    buf.seek(0)
    recs = read_jsonl(buf)
    assert [r["id"] for r in recs] == ["crl4", "p1"]
    assert json.dumps(recs[0], ensure_ascii=False)
    out = io.StringIO()
    write_csv(reports, out)
    assert out.getvalue().splitlines()[0].startswith("id,k,passed")
