"""Building blocks for the lemma checks.

A check receives a :class:`Check` context for one value of ``k`` and records
exact comparisons and constant bounds on it.  The context also collects the
lambda^- values of every string a check declares prohibited; the threshold
module takes minima over those.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable

from ..cfcore import MarkedWord, Word, continuant
from ..spectra import (LIMIT, ExtremalKind, _tail_for, lambda0_gamma1,
                       lambda0_theta_omega, lambda_minus, lambda_plus)
from ..surd import SurdSum, TailSpec, eval_cf, to_decimal

DIGITS = 30


class UnknownLemma(KeyError):
    pass


class KOutOfRange(ValueError):
    pass


_RELATIONS: dict[str, Callable[[int], bool]] = {
    "<": lambda s: s < 0,
    "<=": lambda s: s <= 0,
    ">": lambda s: s > 0,
    ">=": lambda s: s >= 0,
    "=": lambda s: s == 0,
}


def _as_bound(x):
    if isinstance(x, (Fraction, SurdSum)):
        return x
    if isinstance(x, float):
        raise TypeError("pass decimal bounds as strings to keep them exact")
    return Fraction(str(x)) if isinstance(x, str) else Fraction(x)


def _fmt(x: SurdSum, digits: int = DIGITS) -> str:
    return to_decimal(x, digits)


@dataclass(frozen=True)
class Comparison:
    """``lhs relation rhs`` decided exactly.

    ``margin`` is oriented so that it is nonnegative exactly when the relation
    holds (``lhs - rhs`` for ``>``, ``rhs - lhs`` for ``<``).
    """

    lhs_label: str
    relation: str
    rhs_label: str
    lhs: SurdSum
    rhs: SurdSum
    holds: bool
    margin: SurdSum

    @classmethod
    def make(cls, lhs_label, lhs, relation, rhs_label, rhs) -> "Comparison":
        lhs, rhs = SurdSum.coerce(lhs), SurdSum.coerce(rhs)
        diff = lhs - rhs
        holds = _RELATIONS[relation](diff.sign())
        margin = -diff if relation in ("<", "<=") else diff
        return cls(lhs_label, relation, rhs_label, lhs, rhs, holds, margin)

    def __str__(self):
        mark = "ok" if self.holds else "FAIL"
        return (f"{self.lhs_label} {self.relation} {self.rhs_label} [{mark}, "
                f"margin {_fmt(self.margin, 12)}]")

    def to_record(self, digits: int = DIGITS) -> dict:
        return {
            "statement": f"{self.lhs_label} {self.relation} {self.rhs_label}",
            "holds": self.holds,
            "lhs": str(self.lhs), "lhs_decimal": _fmt(self.lhs, digits),
            "rhs": str(self.rhs), "rhs_decimal": _fmt(self.rhs, digits),
            "margin": str(self.margin), "margin_decimal": _fmt(self.margin, digits),
        }


@dataclass(frozen=True)
class ConstantCheck:
    """An intermediate numeric bound, e.g. ``X > 0.62``, checked exactly."""

    name: str
    relation: str
    bound: Fraction | SurdSum
    value: SurdSum
    satisfied: bool
    applicable: bool = True
    note: str = ""

    def __str__(self):
        tag = "ok" if self.satisfied else ("FAIL" if self.applicable else "miss, report only")
        return f"{self.name} {self.relation} {self.bound} [{tag}, value {_fmt(self.value, 8)}]"

    def to_record(self, digits: int = DIGITS) -> dict:
        return {
            "name": self.name, "relation": self.relation, "bound": str(self.bound),
            "value": str(self.value), "value_decimal": _fmt(self.value, digits),
            "satisfied": self.satisfied, "applicable": self.applicable, "note": self.note,
        }


@dataclass(frozen=True)
class LemmaReport:
    id: str
    k: int
    passed: bool
    main_inequality: Comparison | None
    comparisons: tuple[Comparison, ...] = ()
    constant_checks: tuple[ConstantCheck, ...] = ()
    notes: tuple[str, ...] = ()
    skipped: bool = False

    @property
    def margin(self) -> SurdSum | None:
        return None if self.main_inequality is None else self.main_inequality.margin

    def failures(self) -> list[str]:
        out = [str(c) for c in self.comparisons if not c.holds]
        out += [str(c) for c in self.constant_checks if c.applicable and not c.satisfied]
        return out

    def to_record(self, digits: int = DIGITS) -> dict:
        main = self.main_inequality
        return {
            "id": self.id,
            "k": self.k,
            "passed": self.passed,
            "skipped": self.skipped,
            "statement": None if main is None else f"{main.lhs_label} {main.relation} {main.rhs_label}",
            "margin": None if main is None else str(main.margin),
            "margin_decimal": None if main is None else _fmt(main.margin, digits),
            "comparisons": [c.to_record(digits) for c in self.comparisons],
            "constant_checks": [c.to_record(digits) for c in self.constant_checks],
            "notes": list(self.notes),
        }


# -- continued fraction literals --------------------------------------------

_CF = re.compile(r"^\[\s*(\d+)\s*;(.*)\|\s*([12 ]+)\]$")


@dataclass(frozen=True)
class CF:
    """``[a0; body | tail]`` with the tail repeating forever.

    A ``^`` token inside ``body`` marks where a decomposition splits the
    expansion into a shared prefix and a remainder; without it the split is
    chosen at the first disagreement with the partner expansion.
    """

    text: str
    a0: int
    body: tuple[int, ...]
    tail: TailSpec
    cut: int | None

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "CF":
        m = _CF.match(text.strip())
        if m is None:
            raise ValueError(f"bad continued fraction literal {text!r}")
        a0, body, tail = int(m.group(1)), m.group(2), m.group(3).replace(" ", "")
        cut = None
        letters: list[int] = []
        for chunk in re.split(r"(\^)", body):
            if chunk == "^":
                cut = len(letters)
            elif chunk.strip():
                letters.extend(Word.parse(chunk.replace(",", " "), k).letters)
        return cls(text, a0, tuple(letters), TailSpec(Word(tuple(int(c) for c in tail))), cut)

    def expansion(self, n: int) -> tuple[int, ...]:
        """First ``n`` partial quotients after ``a0``."""
        out = list(self.body)
        p = self.tail.period.letters
        i = 0
        while len(out) < n:
            out.append(p[i % len(p)])
            i += 1
        return tuple(out[:n])

    @cached_property
    def value(self) -> SurdSum:
        return eval_cf((self.a0,) + self.body, self.tail)

    def remainder(self, cut: int) -> SurdSum:
        """The complete quotient after ``cut`` body letters."""
        if cut >= len(self.body):
            return eval_cf((), self.tail.rotate(cut - len(self.body)))
        return eval_cf(self.body[cut:], self.tail)


def _common_cut(x: CF, y: CF) -> int:
    n = max(len(x.body), len(y.body)) + 2 * max(len(x.tail.period), len(y.tail.period)) + 4
    ex, ey = x.expansion(n), y.expansion(n)
    for i in range(n):
        if ex[i] != ey[i]:
            return i
    raise ValueError(f"{x.text} and {y.text} look identical")


@dataclass(frozen=True)
class Decomposition:
    """(P - Q) / (R - S) written as (q_RS / q_PQ)^2 * X * Y.

    P and Q share the prefix ``a0; a`` and R, S share ``b0; b``.  With complete
    quotients x_P, ... after those prefixes and beta = q(prefix minus last) / q(prefix)
    the usual difference formula gives
    X = |x_P - x_Q| / |x_R - x_S|,
    Y = (x_R + beta_b)(x_S + beta_b) / ((x_P + beta_a)(x_Q + beta_a)).
    """

    ratio: SurdSum
    X: SurdSum
    Y: SurdSum
    q: Fraction
    prefix_num: tuple[int, ...]
    prefix_den: tuple[int, ...]


def _pair(x: CF, y: CF):
    if x.a0 != y.a0:
        raise ValueError(f"{x.text} and {y.text} differ in a0")
    if x.cut is not None or y.cut is not None:
        cut = x.cut if x.cut is not None else y.cut
        if x.cut is not None and y.cut is not None and x.cut != y.cut:
            raise ValueError("inconsistent cuts")
        if x.expansion(cut) != y.expansion(cut):
            raise ValueError(f"{x.text} and {y.text} disagree before the cut")
    else:
        cut = _common_cut(x, y)
    prefix = x.expansion(cut)
    q = continuant(prefix)
    beta = Fraction(continuant(prefix[:-1]), q) if prefix else Fraction(0)
    return prefix, q, beta, x.remainder(cut), y.remainder(cut)


def decompose(num: tuple[CF, CF], den: tuple[CF, CF]) -> Decomposition:
    p, q = num
    r, s = den
    pre_a, qa, ba, xp, xq = _pair(p, q)
    pre_b, qb, bb, xr, xs = _pair(r, s)
    X = abs_surd(xp - xq) / abs_surd(xr - xs)
    Y = ((xr + bb) * (xs + bb)) / ((xp + ba) * (xq + ba))
    ratio = (p.value - q.value) / (r.value - s.value)
    qratio = Fraction(qb, qa)
    if abs_surd(ratio) != qratio * qratio * X * Y:
        raise AssertionError("difference formula mismatch")  # cannot happen for a valid split
    return Decomposition(ratio, X, Y, qratio, pre_a, pre_b)


def abs_surd(x: SurdSum) -> SurdSum:
    return -x if x.sign() < 0 else x


# -- the per-k context -----------------------------------------------------------

@dataclass
class Check:
    k: int
    rewrite: Callable[[str], str] | None = None
    comparisons: list[Comparison] = field(default_factory=list)
    constants: list[ConstantCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    prohibited: list[tuple[str, SurdSum]] = field(default_factory=list)
    main: Comparison | None = None
    statements: list[Comparison] = field(default_factory=list)

    # values

    @cached_property
    def lg(self) -> SurdSum:
        return lambda0_gamma1(self.k)

    @cached_property
    def lw(self) -> SurdSum:
        return lambda0_theta_omega(self.k)

    @property
    def limit(self) -> SurdSum:
        return LIMIT

    def _text(self, text: str) -> str:
        return self.rewrite(text) if self.rewrite else text

    def word(self, text: str) -> MarkedWord:
        return MarkedWord.parse(self._text(text), self.k)

    def lm(self, text: str, at: int = 0) -> SurdSum:
        return lambda_minus(self.word(text), at)

    def lp(self, text: str, at: int = 0) -> SurdSum:
        return lambda_plus(self.word(text), at)

    def cf(self, text: str) -> CF:
        return CF.parse(self._text(text), self.k)

    def v(self, text: str) -> SurdSum:
        return self.cf(text).value

    def parts(self, text: str, kind: str = "min") -> tuple[str, str]:
        """Forward and backward expansions realising lambda^-_0 or lambda^+_0 of ``text``."""
        u = self.word(text)
        kind = ExtremalKind(kind)
        fwd = tuple(u.at(t) for t in range(0, u.right + 1))
        bwd = tuple(u.at(t) for t in range(-1, -u.left - 1, -1))
        ft = _tail_for(len(fwd), kind).period
        bt = _tail_for(len(bwd) + 1, kind).period
        return (f"[{fwd[0]}; {Word(fwd[1:])} | {ft}]", f"[0; {Word(bwd)} | {bt}]")

    # recording

    def compare(self, lhs_label: str, lhs, relation: str, rhs_label: str, rhs,
                main: bool = False, statement: bool = True) -> Comparison:
        """Record an exact comparison.

        Statement comparisons are the lemma's own claims; the report's main
        inequality is the one flagged ``main`` or else the tightest statement.
        """
        c = Comparison.make(lhs_label, lhs, relation, rhs_label, rhs)
        self.comparisons.append(c)
        if main:
            self.main = c
        if statement and relation != "=":
            self.statements.append(c)
        return c

    def step(self, lhs_label: str, lhs, relation: str, rhs_label: str, rhs) -> Comparison:
        """A comparison used inside a proof rather than claimed by the lemma."""
        return self.compare(lhs_label, lhs, relation, rhs_label, rhs, statement=False)

    def main_inequality(self) -> Comparison | None:
        if self.main is not None:
            return self.main
        if not self.statements:
            return None
        return min(self.statements, key=lambda c: (c.holds, float(c.margin)))

    def const(self, name: str, value, relation: str, bound, applicable: bool = True,
              note: str = "") -> ConstantCheck:
        bound = _as_bound(bound)
        value = SurdSum.coerce(value)
        ok = _RELATIONS[relation]((value - bound).sign())
        c = ConstantCheck(name, relation, bound, value, ok, applicable, note)
        self.constants.append(c)
        return c

    def note(self, text: str) -> None:
        self.notes.append(text)

    # common statement shapes

    def prohibits(self, text: str, at: int = 0, main: bool = False) -> SurdSum:
        """lambda^-_at(text) > lambda_0(gamma_k^1); the value feeds the thresholds."""
        v = self.lm(text, at)
        self.compare(f"lm({text})", v, ">", "m(gamma)", self.lg, main=main)
        self.prohibited.append((text, v))
        return v

    def avoids(self, text: str, main: bool = False) -> SurdSum:
        """lambda^+_0(text) < lambda_0(theta(omega_k))."""
        v = self.lp(text)
        self.compare(f"lp({text})", v, "<", "m(theta_omega)", self.lw, main=main)
        return v

    def decomposition(self, num: tuple[str, str], den: tuple[str, str], ratio,
                      X=None, Y=None, q=None, report_only: Iterable[str] = (),
                      label: str = "", relation: str = ">", q_rel: str = ">") -> Decomposition:
        """Check (num0 - num1) / (den0 - den1) and the stated X, Y, q bounds.

        ``q`` bounds q(den prefix) / q(num prefix), unsquared.  Names listed in
        ``report_only`` are recorded without affecting the verdict.
        """
        n0, n1 = (self.cf(t) for t in num)
        d0, d1 = (self.cf(t) for t in den)
        tag = f"{label} " if label else ""
        self.compare(f"{tag}{num[0]} - {num[1]}", n0.value - n1.value, ">", "0", 0,
                     statement=False)
        self.compare(f"{tag}{den[0]} - {den[1]}", d0.value - d1.value, ">", "0", 0,
                     statement=False)
        dec = decompose((n0, n1), (d0, d1))
        ro = set(report_only)
        for name, val, bound in (("X", dec.X, X), ("Y", dec.Y, Y), ("q", dec.q, q)):
            if bound is not None:
                self.const(f"{tag}{name}", val, q_rel if name == "q" else ">", bound,
                           applicable=name not in ro)
        self.const(f"{tag}ratio", dec.ratio, relation, ratio, applicable="ratio" not in ro)
        return dec

    def cl_u1(self, A: str, B: str, C: str, D: str, label: str = "",
              stated=None, report_only: bool = False) -> None:
        """Apply the q(b) >= 3 q(a) comparison lemma to A + B versus C + D.

        Checks its hypotheses on the given expansions: the orientation
        (A > C, D > B, or the reverse) and the continuant condition.
        """
        a, b, c, d = (self.cf(t) for t in (A, B, C, D))
        pre_a = a.expansion(_common_cut(a, c))
        pre_b = b.expansion(_common_cut(b, d))
        tag = f"{label} " if label else ""
        qa = continuant(pre_a)
        qb = continuant(pre_b)
        if qb < qa:  # the lemma is symmetric in the two pairs; put the short prefix first
            a, b, c, d = b, a, d, c
            pre_a, pre_b, qa, qb = pre_b, pre_a, qb, qa
        self.const(f"{tag}q(b)/q(a)", Fraction(qb, qa), ">=", 3, applicable=not report_only)
        if stated is not None:
            self.const(f"{tag}q(b)/q(a) stated", Fraction(qb, qa), ">", stated,
                       applicable=not report_only)
        if not (len(pre_a) >= 2 or (pre_a and pre_a[0] == 2)):
            self.note(f"{tag}prefix a={Word(pre_a)} outside the comparison lemma's shape")
        if not (len(pre_b) >= 3 or (pre_b and pre_b[0] == 1)):
            self.note(f"{tag}prefix b={Word(pre_b)} outside the comparison lemma's shape")
        if a.value > c.value:
            self.compare(f"{tag}D", d.value, ">", "B", b.value, statement=False)
            self.compare(f"{tag}A + B", a.value + b.value, ">", "C + D", c.value + d.value,
                         statement=False)
        else:
            self.compare(f"{tag}B", b.value, ">", "D", d.value, statement=False)
            self.compare(f"{tag}C + D", c.value + d.value, ">", "A + B", a.value + b.value,
                         statement=False)


# -- registry -------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaCheck:
    id: str
    k_min: int
    builder: Callable[[Check], None]
    description: str = ""

    @property
    def k_range(self) -> str:
        return f"k >= {self.k_min}"


REGISTRY: dict[str, LemmaCheck] = {}


def register(lemma_id: str, k_min: int = 3, description: str = ""):
    def deco(fn: Callable[[Check], None]):
        if lemma_id in REGISTRY:
            raise ValueError(f"duplicate lemma id {lemma_id}")
        REGISTRY[lemma_id] = LemmaCheck(lemma_id, k_min, fn, description or (fn.__doc__ or "").strip())
        return fn
    return deco


def run_check(lemma_id: str, k: int, rewrite: Callable[[str], str] | None = None) -> tuple[LemmaReport, Check]:
    try:
        entry = REGISTRY[lemma_id]
    except KeyError:
        raise UnknownLemma(f"unknown lemma id {lemma_id!r}") from None
    if not isinstance(k, int) or k < entry.k_min:
        raise KOutOfRange(f"{lemma_id} needs {entry.k_range}, got k={k}")
    chk = Check(k, rewrite)
    entry.builder(chk)
    passed = (all(c.holds for c in chk.comparisons)
              and all(c.satisfied for c in chk.constants if c.applicable))
    report = LemmaReport(lemma_id, k, passed, chk.main_inequality(), tuple(chk.comparisons),
                         tuple(chk.constants), tuple(chk.notes))
    return report, chk


def verify_lemma(lemma_id: str, k: int, rewrite: Callable[[str], str] | None = None) -> LemmaReport:
    """Re-run one registered lemma for a concrete ``k``.

    ``rewrite`` maps every word literal before parsing; tests use it to
    corrupt a word and watch the entry fail.
    """
    return run_check(lemma_id, k, rewrite)[0]


def skipped_report(lemma_id: str, k: int) -> LemmaReport:
    entry = REGISTRY[lemma_id]
    return LemmaReport(lemma_id, k, True, None, notes=(f"skipped: requires {entry.k_range}",),
                       skipped=True)


def _cell(args) -> LemmaReport:
    lemma_id, k = args
    if k < REGISTRY[lemma_id].k_min:
        return skipped_report(lemma_id, k)
    return verify_lemma(lemma_id, k)


def verify_all(k_lo: int, k_hi: int, workers: int | None = None,
               ids: Iterable[str] | None = None) -> list[LemmaReport]:
    """Run every registered entry for each k in ``k_lo..k_hi``.

    Entries whose range starts above ``k`` come back as skipped reports.
    With ``workers > 1`` the cells run in a process pool; the result is
    sorted by (id, k) either way.
    """
    if not (isinstance(k_lo, int) and isinstance(k_hi, int)) or k_lo < 3 or k_hi < k_lo:
        raise KOutOfRange(f"need 3 <= k_lo <= k_hi, got {k_lo}, {k_hi}")
    cells = [(lid, k) for lid in (ids if ids is not None else REGISTRY)
             for k in range(k_lo, k_hi + 1)]
    for lid, _ in cells:
        if lid not in REGISTRY:
            raise UnknownLemma(f"unknown lemma id {lid!r}")
    if workers and workers > 1 and len(cells) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_cell, cells, chunksize=4))
    else:
        reports = [_cell(c) for c in cells]
    return sorted(reports, key=lambda r: (r.id, r.k))
