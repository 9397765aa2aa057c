"""Command-line front end.

Exit status: 0 when every requested check passed, 1 when one failed or a
search ran out of budget, 2 on bad input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import search as srch
from .certify import (REGISTRY, KOutOfRange, ThresholdCollapse, UnknownLemma,
                      interleaving_report, thresholds, verify_all, verify_lemma)
from .certify.core import skipped_report
from .report import write_csv, write_jsonl
from .spectra import BiWord, KTooSmall, WindowTooShallow, classify, lambda_at, markov_value
from .surd import to_decimal

DEFAULT_DIGITS = 30


class UsageError(ValueError):
    pass


def _k_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _approx(x, digits: int) -> str:
    return to_decimal(x, digits) + "…"


def _print_report(r, digits: int) -> None:
    if r.skipped:
        print(f"SKIP {r.id} k={r.k}: {r.notes[0]}")
        return
    tag = "PASS" if r.passed else "FAIL"
    main = r.main_inequality
    line = f"{tag} {r.id} k={r.k}"
    if main is not None:
        line += f": {main.lhs_label} {main.relation} {main.rhs_label}, margin {main.margin}"
        line += f" ≈ {_approx(main.margin, digits)}"
    print(line)
    for f in r.failures():
        print(f"  failed: {f}")
    for n in r.notes:
        print(f"  note: {n}")


# -- subcommands -------------------------------------------------------------

def cmd_value(a) -> int:
    w = BiWord.parse(a.word, a.k)
    v = lambda_at(w, a.at)
    print(f"lambda_{a.at} = {v} ≈ {_approx(v, a.digits)}")
    return 0


def cmd_markov(a) -> int:
    w = BiWord.parse(a.word, a.k)
    mv = markov_value(w)
    print(f"{mv.value} ≈ {_approx(mv.value, a.digits)}")
    print(f"witness {mv.witness}")
    return 0


def cmd_classify(a) -> int:
    c = classify(a.word, a.k)
    where = "" if c.witness_index is None else f" at index {c.witness_index}"
    print(f"{c.verdict.value}{where}, margin ≈ {_approx(c.margin, a.digits)}")
    for n in c.notes:
        print(f"  note: {n}")
    return 0


def _ks(a) -> tuple[int, int]:
    if a.k is not None:
        return a.k, a.k
    if a.k_range is not None:
        return a.k_range
    raise UsageError("give --k or --k-range")


def cmd_lemma(a) -> int:
    lo, hi = _ks(a)
    if a.all:
        reports = verify_all(lo, hi, workers=a.workers)
    else:
        if a.id not in REGISTRY:
            raise UnknownLemma(a.id)
        reports = [verify_lemma(a.id, k) if k >= REGISTRY[a.id].k_min
                   else skipped_report(a.id, k) for k in range(lo, hi + 1)]
    for r in reports:
        _print_report(r, a.digits)
    bad = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(bad)}/{len(reports)} passed")
    return 1 if bad else 0


def cmd_thresholds(a) -> int:
    t = thresholds(a.k)
    for name, v in t.values().items():
        print(f"{name:13s} {_approx(v, a.digits)}  margin over m(gamma) "
              f"{t.margins(a.digits)[name]}")
    return 0


def cmd_interleave(a) -> int:
    lo, hi = a.k_range
    rows = interleaving_report(lo, hi)
    ok = True
    for r in rows:
        mark = "ok" if r.chain_holds and r.decreasing else "FAIL"
        ok &= r.chain_holds and r.decreasing
        print(f"k={r.k}: m(theta(omega_k)) {_approx(r.m_theta_omega, a.digits)} < "
              f"m(gamma_k^1) {_approx(r.m_gamma, a.digits)} < "
              f"m(theta(omega_k-1)) {_approx(r.m_theta_omega_prev, a.digits)}  "
              f"gap to limit {_approx(r.gap, a.digits)} [{mark}]")
    return 0 if ok else 1


_SEARCHES = {
    "local-uniqueness": srch.local_uniqueness,
    "extension": srch.extension_check,
    "replication": srch.replication_check,
}


def cmd_search(a) -> int:
    fn = _SEARCHES[a.kind]
    v = fn(a.k, a.depth, workers=a.workers, budget=a.budget)
    print(f"exhausted={v.exhausted} depth_reached={v.depth_reached} nodes={v.node_count} "
          f"survivors={len(v.surviving_patterns)} passed={v.passed}")
    shown = v.surviving_patterns if a.show is None else v.surviving_patterns[:a.show]
    for w in shown:
        print("  " + srch.window_literal(w))
    for w in v.nonconforming:
        print("  nonconforming: " + srch.window_literal(w))
    return 0 if v.passed else 1


def cmd_report(a) -> int:
    lo, hi = a.k_range
    reports = verify_all(lo, hi, workers=a.workers)
    writer = write_jsonl if a.format == "json" else write_csv
    if a.out == "-":
        writer(reports, sys.stdout, a.digits)
    else:
        with open(a.out, "w", encoding="utf-8", newline="") as fh:
            writer(reports, fh, a.digits)
    bad = sum(not r.passed for r in reports)
    print(f"{len(reports)} records, {bad} failed", file=sys.stderr)
    return 1 if bad else 0


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="markov-spectra",
                                description="Exact Markov/Lagrange spectrum tools near 1+3/sqrt 2.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=DEFAULT_DIGITS,
                        help="decimal digits in printed approximations")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("value", parents=[common], help="lambda_i of a bi-infinite word")
    s.add_argument("word", help='e.g. "per(1 2) | 2* 1 | per(2)"')
    s.add_argument("--at", type=int, default=0)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_value)

    s = sub.add_parser("markov", parents=[common], help="Markov value and witness position")
    s.add_argument("word")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_markov)

    s = sub.add_parser("classify", parents=[common], help="k-prohibited / k-avoided / neutral")
    s.add_argument("word")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("lemma", parents=[common], help="run registered inequality checks")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--id")
    g.add_argument("--all", action="store_true")
    s.add_argument("--k", type=int)
    s.add_argument("--k-range", type=_k_range)
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_lemma)

    s = sub.add_parser("thresholds", parents=[common], help="admissibility thresholds for one k")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_thresholds)

    s = sub.add_parser("interleave", parents=[common],
                       help="m(theta(omega_k)) < m(gamma_k^1) < m(theta(omega_k-1))")
    s.add_argument("--k-range", type=_k_range, required=True)
    s.set_defaults(func=cmd_interleave)

    s = sub.add_parser("search", parents=[common], help="bounded-depth admissible-window search")
    s.add_argument("kind", choices=sorted(_SEARCHES))
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--workers", type=int)
    s.add_argument("--budget", type=int, default=srch.DEFAULT_BUDGET)
    s.add_argument("--show", type=int, default=10, help="survivors to print (default 10)")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("report", parents=[common], help="write lemma reports as JSON lines or CSV")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", required=True, help="output path, or - for stdout")
    s.add_argument("--k-range", type=_k_range, default=(4, 10))
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_report)
    return p


_INPUT_ERRORS = (ValueError, KeyError, UsageError)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("SPECTRA_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ThresholdCollapse, WindowTooShallow) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (KOutOfRange, KTooSmall, srch.EmptyRange, UnknownLemma) + _INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
