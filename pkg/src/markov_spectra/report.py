"""Structured output for lemma reports: JSON lines (canonical) and CSV."""

from __future__ import annotations

import csv
import json
from typing import IO, Iterable

from .certify import LemmaReport
from .surd import to_decimal

DIGITS = 30

CSV_FIELDS = ("id", "k", "passed", "skipped", "statement", "margin", "margin_decimal",
              "failed_constants", "notes")


def lemma_record(r: LemmaReport, digits: int = DIGITS) -> dict:
    rec = r.to_record(digits)
    if r.margin is not None:
        rec["margin_decimal"] = to_decimal(r.margin, digits)
    return rec


def write_jsonl(reports: Iterable[LemmaReport], out: IO[str], digits: int = DIGITS) -> int:
    n = 0
    for r in reports:
        out.write(json.dumps(lemma_record(r, digits), ensure_ascii=False) + "\n")
        n += 1
    return n


def write_csv(reports: Iterable[LemmaReport], out: IO[str], digits: int = DIGITS) -> int:
    """One row per (id, k); nested comparisons are flattened away."""
    w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    n = 0
    for r in reports:
        rec = lemma_record(r, digits)
        bad = [c["name"] for c in rec["constant_checks"]
               if c["applicable"] and not c["satisfied"]]
        w.writerow({
            "id": rec["id"], "k": rec["k"], "passed": rec["passed"], "skipped": rec["skipped"],
            "statement": rec["statement"] or "", "margin": rec["margin"] or "",
            "margin_decimal": rec["margin_decimal"] or "",
            "failed_constants": ";".join(bad), "notes": " | ".join(rec["notes"]),
        })
        n += 1
    return n


def read_jsonl(src: IO[str]) -> list[dict]:
    return [json.loads(line) for line in src if line.strip()]
