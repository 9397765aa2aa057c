"""Bi-infinite words, two-sided values, Markov values and extremal completions."""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .cfcore import MarkedWord, Word, WordError, as_word, continuant
from .surd import QuadSurd, SurdSum, TailSpec, as_tail, eval_cf, periodic_value

# [1; 2, 1, 2, ...] and [2; 1, 2, 1, ...]: the smallest and largest tails
TAIL_MIN = TailSpec(Word((1, 2)))
TAIL_MAX = TailSpec(Word((2, 1)))
_F_MIN = (1 + math.sqrt(3)) / 2
_F_MAX = 1 + math.sqrt(3)


class KTooSmall(ValueError):
    pass


class WindowTooShallow(RuntimeError):
    pass


class BiWordError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class BiWord:
    """``... P P C Q Q ...`` with position 0 at the mark of ``C``.

    ``left`` is written in reading order, so the letter just left of the
    center is ``left.period[-1]``.
    """

    left: TailSpec
    center: MarkedWord
    right: TailSpec

    def __post_init__(self):
        object.__setattr__(self, "left", as_tail(self.left))
        object.__setattr__(self, "right", as_tail(self.right))
        if isinstance(self.center, str):
            object.__setattr__(self, "center", MarkedWord.parse(self.center))

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "BiWord":
        parts = [p.strip() for p in text.split("|")]
        if len(parts) != 3:
            raise BiWordError(f"expected 'per(P) | C | per(Q)', got {text!r}")
        tails = []
        for p in (parts[0], parts[2]):
            m = re.fullmatch(r"per\((.+)\)", p)
            if m is None:
                raise BiWordError(f"bad periodic tail {p!r}")
            tails.append(TailSpec(Word.parse(m.group(1), k)))
        return cls(tails[0], MarkedWord.parse(parts[1], k), tails[1])

    def __str__(self):
        return f"per({self.left.period}) | {self.center} | per({self.right.period})"

    @property
    def lo(self) -> int:
        """Index of the first center letter."""
        return -self.center.left

    @property
    def hi(self) -> int:
        """Index of the last center letter."""
        return self.center.right

    def at(self, i: int) -> int:
        if i < self.lo:
            p = self.left.period.letters
            return p[(i - self.lo) % len(p)]
        if i > self.hi:
            q = self.right.period.letters
            return q[(i - self.hi - 1) % len(q)]
        return self.center.at(i)

    def letters(self, start: int, stop: int) -> tuple[int, ...]:
        """Letters at indices ``start .. stop - 1``."""
        return tuple(self.at(i) for i in range(start, stop))

    def window(self, start: int, stop: int) -> MarkedWord:
        """Finite marked word covering ``start .. stop`` (inclusive, must contain 0)."""
        return MarkedWord(Word(self.letters(start, stop + 1)), -start)

    def shift(self, n: int) -> "BiWord":
        """Same sequence with position 0 moved to the old position ``n``."""
        lo, hi = min(self.lo, n), max(self.hi, n)
        letters = self.letters(lo, hi + 1)
        # keep the tails aligned: rotate so that the new boundaries read correctly
        lp = self.left.period.letters
        rp = self.right.period.letters
        left = TailSpec(Word(_rotate(lp, (lo - self.lo) % len(lp))))
        right = TailSpec(Word(_rotate(rp, (hi - self.hi) % len(rp))))
        return BiWord(left, MarkedWord(Word(letters), n - lo), right)

    def transpose(self) -> "BiWord":
        return BiWord(TailSpec(self.right.period.reverse()), self.center.transpose(),
                      TailSpec(self.left.period.reverse()))

    def periodic_root(self) -> tuple[tuple[int, ...], int] | None:
        """``(R, phase)`` if the word is purely periodic with primitive period R.

        Then the letter at index i is ``R[(i + phase) % len(R)]``.
        """
        p = self.left.period.letters
        n = len(p)
        lo = self.lo
        for i in range(lo, self.hi + 1):
            if self.at(i) != p[(i - lo) % n]:
                return None
        q = self.right.period.letters
        span = n * len(q) // math.gcd(n, len(q))
        for i in range(self.hi + 1, self.hi + 1 + span):
            if self.at(i) != p[(i - lo) % n]:
                return None
        root = _primitive_root(p)
        return root, (-lo) % len(root)


def _rotate(seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    n %= len(seq)
    return seq[n:] + seq[:n]


def _primitive_root(seq: tuple[int, ...]) -> tuple[int, ...]:
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq == seq[:d] * (n // d):
            return seq[:d]
    return seq


def periodic(word, mark: int = 0) -> BiWord:
    """The purely periodic word ``...www...`` with position 0 at ``w[mark]``."""
    w = as_word(word)
    return BiWord(TailSpec(w), MarkedWord(w, mark), TailSpec(w))


# -- two-sided values ----------------------------------------------------------

def _forward(w: BiWord, i: int) -> QuadSurd:
    """[a_i; a_{i+1}, ...]"""
    if i > w.hi:
        return periodic_value(w.right.rotate(i - w.hi - 1))
    return eval_cf(w.letters(i, w.hi + 1), w.right)


def _backward(w: BiWord, i: int) -> QuadSurd:
    """[0; a_{i-1}, a_{i-2}, ...]"""
    rev_left = TailSpec(w.left.period.reverse())
    if i - 1 < w.lo:
        # a_{i-1} sits in the left tail, j letters away from the center
        j = w.lo - i
        return eval_cf((0,), rev_left.rotate(j))
    prefix = (0,) + tuple(w.at(t) for t in range(i - 1, w.lo - 1, -1))
    return eval_cf(prefix, rev_left)


def lambda_at(w: BiWord, i: int) -> SurdSum:
    """lambda_i = [a_i; a_{i+1}, ...] + [0; a_{i-1}, a_{i-2}, ...]."""
    return _forward(w, i) + _backward(w, i)


def _float_lambdas(w: BiWord, lo: int, hi: int) -> list[float]:
    """Approximate lambda_i for lo <= i <= hi by two sweeps."""
    f = [0.0] * (hi - lo + 2)
    f[-1] = float(_forward(w, hi + 1))
    for i in range(hi, lo - 1, -1):
        f[i - lo] = w.at(i) + 1.0 / f[i - lo + 1]
    g = [0.0] * (hi - lo + 2)  # g[t] = [a_{lo+t-1}; a_{lo+t-2}, ...]
    b0 = float(_backward(w, lo))
    g[0] = 1.0 / b0
    for t in range(1, hi - lo + 2):
        g[t] = w.at(lo + t - 1) + 1.0 / g[t - 1]
    return [f[t] + 1.0 / g[t] for t in range(hi - lo + 1)]


def _argmax_exact(w: BiWord, indices: list[int], approx: list[float]) -> tuple[SurdSum, int]:
    top = max(approx)
    best = None
    best_i = None
    for i, a in zip(indices, approx):
        if a < top - 1e-9:
            continue
        v = lambda_at(w, i)
        if best is None or v > best:
            best, best_i = v, i
    return best, best_i


@lru_cache(maxsize=256)
def _periodic_sup(root: tuple[int, ...]) -> tuple[SurdSum, int]:
    w = periodic(Word(root), 0)
    n = len(root)
    approx = _float_lambdas(w, 0, n - 1)
    return _argmax_exact(w, list(range(n)), approx)


@dataclass(frozen=True)
class MarkovValue:
    """Result of :func:`markov_value`; unpacks as ``(value, witness)``."""

    value: SurdSum
    witness: int
    window: tuple[int, int]
    outside_bound: SurdSum | None = None
    runner_up: SurdSum | None = None

    def __iter__(self) -> Iterator:
        return iter((self.value, self.witness))


def markov_value(w: BiWord, depth: int | None = None) -> MarkovValue:
    """Exact sup of lambda_i over all i, with the smallest index attaining it.

    Positions inside a finite window are evaluated exactly; the rest are
    bounded by the sup over the periodic tail plus ``2 / q^2``, where q is the
    continuant of the letters separating the position from the center (two
    expansions sharing n partial quotients differ by less than that amount,
    as every complete quotient lies in (1, 3)).
    """
    root = w.periodic_root()
    if root is not None:
        r, phase = root
        value, i = _periodic_sup(r)
        n = len(r)
        witness = (i - phase) % n
        ranked = sorted(set((i - phase) % n for i in range(n)))
        cand = [j for j in ranked if lambda_at(w, j) == value]
        return MarkovValue(value, min(cand), (0, n - 1))

    lp, rp = len(w.left.period), len(w.right.period)
    dl = 3 * lp + 24 if depth is None else depth
    dr = 3 * rp + 24 if depth is None else depth
    lo, hi = w.lo - dl, w.hi + dr
    indices = list(range(lo, hi + 1))
    approx = _float_lambdas(w, lo, hi)
    value, witness = _argmax_exact(w, indices, approx)

    left_sup, _ = _periodic_sup(_primitive_root(w.left.period.letters))
    right_sup, _ = _periodic_sup(_primitive_root(w.right.period.letters))
    q_left = continuant(w.letters(lo + 1, w.lo))
    q_right = continuant(w.letters(w.hi + 1, hi))
    b_left = left_sup + Fraction(2, q_left * q_left)
    b_right = right_sup + Fraction(2, q_right * q_right)
    bound = b_left if b_left > b_right else b_right
    if not bound < value:
        raise WindowTooShallow(
            f"tail bound {float(bound):.12f} does not clear window max {float(value):.12f}"
        )
    order = sorted(range(len(indices)), key=lambda t: -approx[t])
    runner = None
    for t in order[:8]:
        if indices[t] != witness:
            v = lambda_at(w, indices[t])
            if runner is None or v > runner:
                runner = v
    return MarkovValue(value, witness, (lo, hi), bound, runner)


# -- extremal completions -----------------------------------------------------

class ExtremalKind(enum.Enum):
    MIN = "min"
    MAX = "max"


def _tail_for(first_index: int, kind: ExtremalKind) -> TailSpec:
    # Raising a partial quotient at an even index raises the value.
    want_small = (first_index % 2 == 0) == (kind is ExtremalKind.MIN)
    return TAIL_MIN if want_small else TAIL_MAX


def lambda_extremal(u: MarkedWord, at: int, kind: ExtremalKind | str) -> QuadSurd:
    """Min or max of lambda_at over all infinite completions of ``u`` on both sides."""
    kind = ExtremalKind(kind) if not isinstance(kind, ExtremalKind) else kind
    if not -u.left <= at <= u.right:
        raise IndexError(f"index {at} outside the marked word")
    fwd = tuple(u.at(t) for t in range(at, u.right + 1))
    bwd = tuple(u.at(t) for t in range(at - 1, -u.left - 1, -1))
    f = eval_cf(fwd, _tail_for(len(fwd), kind))
    b = eval_cf((0,) + bwd, _tail_for(len(bwd) + 1, kind))
    return f + b


def lambda_minus(u, at: int = 0, k: int | None = None) -> QuadSurd:
    return lambda_extremal(_marked(u, k), at, ExtremalKind.MIN)


def lambda_plus(u, at: int = 0, k: int | None = None) -> QuadSurd:
    return lambda_extremal(_marked(u, k), at, ExtremalKind.MAX)


def _marked(u, k=None) -> MarkedWord:
    return u if isinstance(u, MarkedWord) else MarkedWord.parse(u, k)


def extremal_float_bounds(letters: tuple[int, ...]) -> tuple[list[float], list[float]]:
    """Float lambda^- and lambda^+ at every index of a finite word."""
    n = len(letters)
    fmin = [0.0] * (n + 1)
    fmax = [0.0] * (n + 1)
    fmin[n], fmax[n] = _F_MIN, _F_MAX
    for p in range(n - 1, -1, -1):
        a = letters[p]
        fmin[p] = a + 1.0 / fmax[p + 1]
        fmax[p] = a + 1.0 / fmin[p + 1]
    lo = [0.0] * n
    hi = [0.0] * n
    gmin, gmax = _F_MIN, _F_MAX
    for p in range(n):
        lo[p] = fmin[p] + 1.0 / gmax
        hi[p] = fmax[p] + 1.0 / gmin
        a = letters[p]
        gmin, gmax = a + 1.0 / gmax, a + 1.0 / gmin
    return lo, hi


# -- families -------------------------------------------------------------------

def _check_k(k: int, least: int = 2) -> None:
    if not isinstance(k, int) or k < least:
        raise KTooSmall(f"KTooSmall: k={k} (need k >= {least})")


def omega_literal(k: int) -> str:
    return f"2_{2 * k - 1} 1 2_{2 * k} 1 2_{2 * k + 1} 1"


def make_omega(k: int) -> Word:
    """omega_k = 2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1."""
    _check_k(k)
    return Word.parse(omega_literal(k))


def theta_omega(k: int) -> BiWord:
    """The periodic word with period omega_k, marked at the first 2 of a block."""
    return periodic(make_omega(k), 0)


def gamma1_center_literal(k: int) -> str:
    return (f"2* 2_{2 * k - 2} 1 2_{2 * k} 1 2_{2 * k + 1} 1 2_{2 * k - 1} 1 "
            f"2_{2 * k} 1 2_{2 * k - 1} 1 1")


def make_gamma1(k: int) -> BiWord:
    _check_k(k)
    return BiWord(TailSpec(make_omega(k)), MarkedWord.parse(gamma1_center_literal(k)),
                  TailSpec(Word((2,))))


ALPHA_TEMPLATES = {
    1: "1 2_{2k+1} 1 2* 2_{2k-2} 1",
    2: "1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1",
    3: "1 2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1",
    4: "2_{2k+1} 1 2_{2k-1} 1 2_{2k} 1 2_{2k+1} 1 2* 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2_{2k-1}",
}


def make_alpha(k: int, stage: int) -> MarkedWord:
    """The nested marked strings alpha_k^1 .. alpha_k^4."""
    if stage not in ALPHA_TEMPLATES:
        raise ValueError(f"stage must be 1..4, got {stage}")
    _check_k(k, 4 if stage == 4 else 3)
    return MarkedWord.parse(ALPHA_TEMPLATES[stage], k)


@lru_cache(maxsize=64)
def lambda0_theta_omega(k: int) -> SurdSum:
    return lambda_at(theta_omega(k), 0)


@lru_cache(maxsize=64)
def lambda0_gamma1(k: int) -> SurdSum:
    return lambda_at(make_gamma1(k), 0)


LIMIT = QuadSurd(2, 3, 2, 2)  # 1 + 3/sqrt(2)


# -- classification ----------------------------------------------------------

class Verdict(enum.Enum):
    PROHIBITED = "Prohibited"
    AVOIDED = "Avoided"
    NEUTRAL = "Neutral"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness_index: int | None
    margin: SurdSum
    notes: tuple[str, ...] = field(default=())


def classify(u, k: int) -> Classification:
    """k-prohibited, k-avoided or neither; ``margin`` is the deciding slack.

    For a neutral string the margin is the smaller of the two gaps by which
    the string misses being prohibited or avoided.
    """
    _check_k(k, 3)
    u = _marked(u, k)
    lg = lambda0_gamma1(k)
    lw = lambda0_theta_omega(k)
    lows, _ = extremal_float_bounds(u.letters)
    lg_f = float(lg)
    worst = None
    for idx, i in enumerate(u.positions()):
        if lows[idx] < lg_f - 1e-9:
            continue
        v = lambda_extremal(u, i, ExtremalKind.MIN)
        if v > lg:
            return Classification(Verdict.PROHIBITED, i, v - lg)
        if worst is None or v > worst:
            worst = v
    up = lambda_extremal(u, 0, ExtremalKind.MAX)
    if up < lw:
        return Classification(Verdict.AVOIDED, 0, lw - up)
    if worst is None:
        worst = max((lambda_extremal(u, i, ExtremalKind.MIN) for i in u.positions()),
                    key=float)
    gap_p = lg - worst
    gap_a = up - lw
    return Classification(Verdict.NEUTRAL, None, gap_p if gap_p < gap_a else gap_a)
