"""Pruned branch-and-bound enumeration of admissible windows.

A window is a finite marked word standing for every bi-infinite word that
contains it with the marks aligned.  Windows grow one letter at a time,
the shorter side first (ties go right), and a window is dropped as soon as
no completion can have its Markov value attained at 0 inside (lo, hi):

* lambda^-_0 >= hi            (lambda_0 is forced too large)
* lambda^+_0 <= lo            (lambda_0 is capped too low, i.e. avoided)
* lambda^-_i >= hi, i != 0    (another position already beats the range)

Bounds are screened in double precision, then in 100-digit decimals, and a
comparison that is still too close to call is settled exactly.
"""

from __future__ import annotations

import contextlib
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .cfcore import MarkedWord, Word
from .spectra import (
    ALPHA_TEMPLATES,
    _check_k,
    extremal_float_bounds,
    lambda0_theta_omega,
    lambda_minus,
    lambda_plus,
    omega_literal,
)
from .surd import SurdSum

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7
_PREC = 100
_DEC_GUARD = Decimal("1e-85")
_FLOAT_GUARD = 1e-11
_SPLIT_FRONTIER = 32


class EmptyRange(ValueError):
    """The target interval (lo, hi) is empty."""


@dataclass(frozen=True)
class WindowNode:
    window: MarkedWord
    lo_bound: SurdSum
    hi_bound: SurdSum

    @classmethod
    def of(cls, window: MarkedWord) -> "WindowNode":
        return cls(window, lambda_minus(window, 0), lambda_plus(window, 0))


@dataclass(frozen=True)
class SearchVerdict:
    surviving_patterns: list[MarkedWord]
    exhausted: bool
    depth_reached: int
    node_count: int
    passed: bool | None = None
    nonconforming: list[MarkedWord] = field(default_factory=list)

    def literals(self) -> list[str]:
        return [window_literal(w) for w in self.surviving_patterns]

    def to_record(self) -> dict:
        return {
            "exhausted": self.exhausted,
            "depth_reached": self.depth_reached,
            "node_count": self.node_count,
            "passed": self.passed,
            "survivors": self.literals(),
            "nonconforming": [window_literal(w) for w in self.nonconforming],
        }


def window_literal(w: MarkedWord) -> str:
    """Run-length literal, e.g. ``1 2_9 1 2* 2_6 1``."""
    def runs(seq):
        out, i = [], 0
        while i < len(seq):
            j = i
            while j < len(seq) and seq[j] == seq[i]:
                j += 1
            n = j - i
            out.append(str(seq[i]) if n == 1 else f"{seq[i]}_{n}")
            i = j
        return out
    left = runs(w.letters[:w.mark])
    right = runs(w.letters[w.mark + 1:])
    return " ".join(left + [f"{w.letters[w.mark]}*"] + right)


# -- bound evaluation ---------------------------------------------------------

def _to_surd(x) -> SurdSum:
    if isinstance(x, SurdSum):
        return x
    if isinstance(x, str):
        x = Fraction(x)
    return SurdSum.coerce(x)


def _to_dec(x: SurdSum) -> Decimal:
    return Decimal(x.decimal(_PREC + 10))


with localcontext() as _ctx:
    _ctx.prec = _PREC + 10
    _SQRT3 = Decimal(3).sqrt()


def _decimal_bound(letters: tuple[int, ...], p: int, kind: str) -> Decimal:
    """lambda^-_p (kind 'minus') or lambda^+_p (kind 'plus') to the current precision."""
    one = Decimal(1)
    small, big = (1 + _SQRT3) / 2, 1 + _SQRT3
    fmin, fmax = small, big
    for a in reversed(letters[p:]):
        fmin, fmax = a + one / fmax, a + one / fmin
    gmin, gmax = small, big
    for a in letters[:p]:
        gmin, gmax = a + one / gmax, a + one / gmin
    return fmin + one / gmax if kind == "minus" else fmax + one / gmin


class _Pruner:
    """Decides whether a window can still hold a word with m = lambda_0 in (lo, hi)."""

    def __init__(self, lo: SurdSum, hi: SurdSum):
        self.lo, self.hi = lo, hi
        self.lo_f, self.hi_f = float(lo), float(hi)
        with localcontext() as ctx:
            ctx.prec = _PREC
            self.lo_d, self.hi_d = _to_dec(lo), _to_dec(hi)

    # each test returns True (prune), False (keep) or None (too close to call)
    @staticmethod
    def _cmp_f(x: float, bound: float) -> int | None:
        d = x - bound
        if d > _FLOAT_GUARD:
            return 1
        if d < -_FLOAT_GUARD:
            return -1
        return None

    @staticmethod
    def _cmp_d(x: Decimal, bound: Decimal) -> int | None:
        d = x - bound
        if d > _DEC_GUARD:
            return 1
        if d < -_DEC_GUARD:
            return -1
        return None

    def _checks(self, letters, mark, lows, highs, lo_b, hi_b, cmp):
        """Yield ('prune' | 'open', index, kind) for the three prune rules."""
        c = cmp(highs[mark], lo_b)
        if c is None:
            yield "open", mark, "plus"
        elif c <= 0:
            yield "prune", mark, "plus"
        for p, a in enumerate(letters):
            if a != 2:
                continue
            c = cmp(lows[p], hi_b)
            if c is None:
                yield "open", p, "minus"
            elif c >= 0:
                yield "prune", p, "minus"

    def prune(self, letters: tuple[int, ...], mark: int) -> bool:
        return self.reason(letters, mark) is not None

    def reason(self, letters: tuple[int, ...], mark: int) -> tuple[str, int] | None:
        """Why the window is dropped: ('avoided', i) or ('prohibited', i), with i
        the offending index relative to the mark; None if it survives."""
        def why(p, kind):
            return ("avoided" if kind == "plus" else "prohibited", p - mark)

        lows, highs = extremal_float_bounds(letters)
        open_ = []
        for verdict, p, kind in self._checks(letters, mark, lows, highs,
                                             self.lo_f, self.hi_f, self._cmp_f):
            if verdict == "prune":
                return why(p, kind)
            open_.append((p, kind))
        if not open_:
            return None
        still = []
        with localcontext() as ctx:
            ctx.prec = _PREC
            for p, kind in open_:
                x = _decimal_bound(letters, p, kind)
                if kind == "plus":
                    c = self._cmp_d(x, self.lo_d)
                    if c is not None and c <= 0:
                        return why(p, kind)
                else:
                    c = self._cmp_d(x, self.hi_d)
                    if c is not None and c >= 0:
                        return why(p, kind)
                if c is None:
                    still.append((p, kind))
        for p, kind in still:
            w = MarkedWord(Word(letters), p)
            if kind == "plus":
                if not lambda_plus(w, 0) > self.lo:
                    return why(p, kind)
            elif not lambda_minus(w, 0) < self.hi:
                return why(p, kind)
        return None


def prune_reason(window: MarkedWord, lo, hi) -> tuple[str, int] | None:
    """The rule that removes ``window`` from the (lo, hi) search, if any."""
    return _Pruner(_to_surd(lo), _to_surd(hi)).reason(window.letters, window.mark)


# -- the search ----------------------------------------------------------------

def _next_side(left: int, right: int, depth: int) -> str | None:
    if right < depth and right <= left:
        return "R"
    if left < depth:
        return "L"
    if right < depth:
        return "R"
    return None


def _children(letters, mark, side):
    if side == "R":
        return [(letters + (a,), mark) for a in (1, 2)]
    return [((a,) + letters, mark + 1) for a in (1, 2)]


@dataclass
class _Run:
    survivors: list
    nodes: int
    finished: bool
    deepest: int


def _dfs(root, depth: int, pruner: _Pruner, budget: int) -> _Run:
    """Depth-first search below an already-accepted ``root``; counts children only."""
    stack = [root]
    survivors, nodes, deepest = [], 0, 0
    while stack:
        letters, mark = stack.pop()
        left, right = mark, len(letters) - 1 - mark
        deepest = max(deepest, min(left, right))
        side = _next_side(left, right, depth)
        if side is None:
            survivors.append((letters, mark))
            continue
        kids = []
        for child in _children(letters, mark, side):
            if nodes >= budget:
                return _Run(survivors, nodes, False, deepest)
            nodes += 1
            if not pruner.prune(*child):
                kids.append(child)
        stack.extend(reversed(kids))
    return _Run(survivors, nodes, True, deepest)


def _subtree_job(args) -> _Run:
    root, depth, lo, hi, budget = args
    return _dfs(root, depth, _Pruner(lo, hi), budget)


def admissible_windows(k: int, lo, hi, depth: int, *, seed: str | MarkedWord = "2*",
                       workers: int | None = None, budget: int = DEFAULT_BUDGET,
                       executor: Executor | None = None) -> SearchVerdict:
    """Every window of radius ``depth`` that can hold a word with m = lambda_0 in (lo, hi).

    The radius is counted in letters on each side of the mark; a seed longer
    than ``depth`` on one side keeps its extra letters.  Survivors come back
    sorted, and node counts do not depend on ``workers``.  An ``executor``
    may be passed to reuse one process pool across many searches.
    """
    _check_k(k)
    lo, hi = _to_surd(lo), _to_surd(hi)
    if not lo < hi:
        raise EmptyRange(f"EmptyRange: lo={lo.decimal(20)} is not below hi={hi.decimal(20)}")
    if not isinstance(depth, int) or depth < 1:
        raise ValueError(f"depth must be a positive integer, got {depth!r}")
    seed = seed if isinstance(seed, MarkedWord) else MarkedWord.parse(seed, k)
    pruner = _Pruner(lo, hi)
    root = (seed.letters, seed.mark)
    nodes = 1
    if pruner.prune(*root):
        return SearchVerdict([], True, 0, nodes)

    # breadth-first split into independent subtrees; the frontier is fixed by
    # the inputs alone so that every worker count sees the same partition
    frontier, deepest = [root], 0
    while len(frontier) < _SPLIT_FRONTIER:
        nxt, grew = [], False
        for letters, mark in frontier:
            side = _next_side(mark, len(letters) - 1 - mark, depth)
            if side is None:
                nxt.append((letters, mark))
                continue
            grew = True
            for child in _children(letters, mark, side):
                nodes += 1
                if not pruner.prune(*child):
                    nxt.append(child)
        frontier = nxt
        if not grew or not frontier or nodes >= budget:
            break
    if nodes >= budget and any(_next_side(m, len(l) - 1 - m, depth) for l, m in frontier):
        return SearchVerdict([], False, 0, nodes)

    # each subtree may spend whatever is left of the budget; runs are then
    # accepted in frontier order, and the first one that would overflow the
    # running total ends the search, so the verdict never depends on workers
    share = budget - nodes
    parallel = executor is not None or (workers and workers > 1)
    if parallel and len(frontier) > 1:
        width = workers if workers and workers > 1 else 2
        with contextlib.ExitStack() as stack:
            pool = executor or stack.enter_context(ProcessPoolExecutor(max_workers=width))
            runs, spent = [], 0
            for b in range(0, len(frontier), width):
                jobs = [(r, depth, lo, hi, share - spent) for r in frontier[b:b + width]]
                batch = list(pool.map(_subtree_job, jobs))
                runs.extend(batch)
                spent += sum(run.nodes for run in batch)
                if spent > share or not all(run.finished for run in batch):
                    break
    else:
        runs, spent = [], 0
        for r in frontier:
            run = _dfs(r, depth, pruner, share - spent)
            runs.append(run)
            spent += run.nodes
            if not run.finished:
                break
    kept, finished = [], True
    for run in runs:
        if not run.finished or nodes + run.nodes > budget:
            finished = False
            nodes = budget
            break
        kept.append(run)
        nodes += run.nodes
    runs = kept
    survivors = sorted({s for run in runs for s in run.survivors})
    deepest = max([deepest] + [run.deepest for run in runs])
    log.info("search k=%s depth=%s: %d nodes, %d survivors, exhausted=%s",
             k, depth, nodes, len(survivors), finished)
    return SearchVerdict([MarkedWord(Word(l), m) for l, m in survivors], finished,
                         depth if finished else deepest, nodes)


# -- theorem checks ---------------------------------------------------------------

def _conforms(window: MarkedWord, pattern: MarkedWord) -> bool:
    """Agreement of the two words wherever both are defined."""
    lo = max(-window.left, -pattern.left)
    hi = min(window.right, pattern.right)
    return all(window.at(i) == pattern.at(i) for i in range(lo, hi + 1))


def _judge(v: SearchVerdict, patterns: list[MarkedWord]) -> SearchVerdict:
    bad = [w for w in v.surviving_patterns if not any(_conforms(w, p) for p in patterns)]
    return SearchVerdict(v.surviving_patterns, v.exhausted, v.depth_reached, v.node_count,
                         passed=(v.exhausted and not bad) if v.exhausted else None,
                         nonconforming=bad)


def category_a(k: int) -> MarkedWord:
    return MarkedWord.parse(ALPHA_TEMPLATES[1], k)


def local_uniqueness(k: int, depth: int, *, hi=None, workers: int | None = None,
                     budget: int = DEFAULT_BUDGET) -> SearchVerdict:
    """Every survivor must agree with A_{2k+1,2k-2} or its mirror image.

    ``passed`` is None when the budget ran out before the tree was exhausted.
    """
    _check_k(k, 3)
    from .certify.thresholds import lambda_1
    hi = lambda_1(k) if hi is None else hi
    v = admissible_windows(k, lambda0_theta_omega(k), hi, depth, workers=workers, budget=budget)
    a = category_a(k)
    return _judge(v, [a, a.transpose()])


def extension_pattern(k: int) -> MarkedWord:
    return MarkedWord.parse(ALPHA_TEMPLATES[4], k)


def extension_check(k: int, depth: int, *, seed: str | MarkedWord | None = None,
                    workers: int | None = None,
                    budget: int = DEFAULT_BUDGET) -> SearchVerdict:
    """Seeded with alpha^1; survivors must continue as alpha^4."""
    _check_k(k, 4)
    from .certify.thresholds import thresholds
    seed = ALPHA_TEMPLATES[1] if seed is None else seed
    v = admissible_windows(k, lambda0_theta_omega(k), thresholds(k).mu_1, depth, seed=seed,
                           workers=workers, budget=budget)
    return _judge(v, [extension_pattern(k)])


@lru_cache(maxsize=None)
def replication_pattern(k: int, left_blocks: int = 8) -> MarkedWord:
    """The gamma_k^1-form word: periodic omega blocks on the left of the mark,
    then 2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2_{2k-1} 1 2_{2k} 1 2_4."""
    left = " ".join([omega_literal(k)] * left_blocks)
    right = "2_{2k-2} 1 2_{2k} 1 2_{2k+1} 1 2_{2k-1} 1 2_{2k} 1 2_4"
    return MarkedWord.parse(f"{left} 2* {right}", k)


def replication_check(k: int, depth: int, *, nu=None, seed: str | MarkedWord | None = None,
                      workers: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> SearchVerdict:
    """Seeded with alpha^4; survivors must match the gamma_k^1 form on the window."""
    _check_k(k, 4)
    from .certify.thresholds import thresholds
    hi = thresholds(k).nu_1 if nu is None else nu
    seed = ALPHA_TEMPLATES[4] if seed is None else seed
    v = admissible_windows(k, lambda0_theta_omega(k), hi, depth, seed=seed,
                           workers=workers, budget=budget)
    blocks = depth // (6 * k + 3) + 2
    return _judge(v, [replication_pattern(k, blocks)])
