"""Exact arithmetic with sums of rational multiples of square roots.

Every value produced by an eventually periodic continued fraction lives in a
real quadratic field, so it is represented by :class:`QuadSurd`, i.e.
``(a + b*sqrt(d)) / c``.  Two-sided values such as ``lambda_i`` add a forward
and a backward expansion whose fields may differ; those sums are
:class:`SurdSum` instances, ``r + sum(c_j * sqrt(d_j))``.

Zero tests are exact: square roots of integers from pairwise distinct square
classes are linearly independent over the rationals.  Signs of nonzero values
are then settled by integer square-root enclosures at increasing precision.

Radicands are not fully factored (the discriminants met here run to 60+
digits).  Small prime squares are removed, perfect squares are folded into the
rational part, and a process-wide registry maps every radicand to a fixed
representative of its square class.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable

from .cfcore import Word, as_word, mobius_of_prefix


class MixedRadicand(ValueError):
    pass


class SurdParseError(ValueError):
    pass


def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return tuple(i for i, ok in enumerate(sieve) if ok)


_PRIMES = _small_primes(5000)


class _SquareClasses:
    """Maps a positive integer d to (rep, t) with sqrt(d) = t * sqrt(rep)."""

    def __init__(self):
        self._lock = threading.Lock()
        self._reps: list[int] = []
        self._cache: dict[int, tuple[int, Fraction]] = {}

    def reduce(self, d: int) -> tuple[int, Fraction]:
        hit = self._cache.get(d)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._cache.get(d)
            if hit is None:
                hit = self._reduce(d)
                self._cache[d] = hit
        return hit

    def _reduce(self, d: int) -> tuple[int, Fraction]:
        coef = 1
        rest = d
        for p in _PRIMES:
            pp = p * p
            if pp > rest:
                break
            while rest % pp == 0:
                rest //= pp
                coef *= p
        r = isqrt(rest)
        if r * r == rest:
            return 1, Fraction(coef * r)
        for rep in self._reps:
            prod = rest * rep
            t = isqrt(prod)
            if t * t == prod:
                # sqrt(rest) = sqrt(rest*rep)/sqrt(rep) = t/rep * sqrt(rep)
                return rep, Fraction(coef * t, rep)
        self._reps.append(rest)
        return rest, Fraction(coef)


_CLASSES = _SquareClasses()


def square_class(d: int) -> tuple[int, Fraction]:
    """Return ``(rep, t)`` with ``sqrt(d) == t * sqrt(rep)``; rep 1 means rational."""
    if d < 0:
        raise ValueError("negative radicand")
    if d == 0:
        return 1, Fraction(0)
    return _CLASSES.reduce(d)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, SurdSum) and x.is_rational():
        return x.rational
    raise TypeError(f"not a rational: {x!r}")


class SurdSum:
    """Immutable value ``rational + sum(coef * sqrt(d))`` in canonical form."""

    __slots__ = ("rational", "terms", "_hash")

    def __init__(self, rational=0, terms: Iterable[tuple[int, object]] = ()):
        acc: dict[int, Fraction] = {}
        r = _frac(rational)
        for d, c in terms:
            c = _frac(c)
            if c == 0:
                continue
            rep, t = square_class(int(d))
            if rep == 1:
                r += c * t
            else:
                acc[rep] = acc.get(rep, Fraction(0)) + c * t
        self.rational = r
        self.terms = tuple(sorted((d, c) for d, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _raw(cls, rational: Fraction, terms: tuple) -> "SurdSum":
        obj = object.__new__(_pick_class(terms))
        obj.rational = rational
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "SurdSum":
        if isinstance(x, SurdSum):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._raw(Fraction(x), ())
        raise TypeError(f"cannot convert {type(x).__name__} to a surd")

    # inspection

    def is_rational(self) -> bool:
        return not self.terms

    @property
    def radicands(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def __reduce__(self):
        return (_rebuild, (self.rational, self.terms))

    # arithmetic

    def __add__(self, other):
        try:
            other = SurdSum.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self.terms)
        for d, c in other.terms:
            acc[d] = acc.get(d, Fraction(0)) + c
        return SurdSum._raw(self.rational + other.rational,
                            tuple(sorted((d, c) for d, c in acc.items() if c != 0)))

    __radd__ = __add__

    def __neg__(self):
        return SurdSum._raw(-self.rational, tuple((d, -c) for d, c in self.terms))

    def __sub__(self, other):
        try:
            other = SurdSum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = SurdSum.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = SurdSum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational():
            s = other.rational
            if s == 0:
                return SurdSum._raw(Fraction(0), ())
            return SurdSum._raw(self.rational * s, tuple((d, c * s) for d, c in self.terms))
        if self.is_rational():
            return other * self
        parts: list[tuple[int, Fraction]] = []
        r = self.rational * other.rational
        for d, c in self.terms:
            parts.append((d, c * other.rational))
        for d, c in other.terms:
            parts.append((d, c * self.rational))
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                if d1 == d2:
                    r += c1 * c2 * d1
                else:
                    parts.append((d1 * d2, c1 * c2))
        return _normalize(SurdSum(r, parts))

    __rmul__ = __mul__

    def inverse(self) -> "SurdSum":
        if self.is_rational():
            if self.rational == 0:
                raise ZeroDivisionError("surd division by zero")
            return SurdSum._raw(1 / self.rational, ())
        if len(self.terms) > 1:
            raise TypeError("division by a sum over several fields is not supported")
        (d, c), r = self.terms[0], self.rational
        den = r * r - c * c * d
        return SurdSum._raw(r / den, ((d, -c / den),))

    def __truediv__(self, other):
        try:
            other = SurdSum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = SurdSum.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    # ordering

    def sign(self) -> int:
        """Exact sign: -1, 0 or +1."""
        if not self.terms:
            return (self.rational > 0) - (self.rational < 0)
        if len(self.terms) == 1 and self.rational == 0:
            return 1 if self.terms[0][1] > 0 else -1
        if len(self.terms) == 1:
            (d, c), r = self.terms[0], self.rational
            # r + c sqrt(d): compare squares when signs differ
            if (r > 0) == (c > 0):
                return 1 if r > 0 else -1
            diff = r * r - c * c * d
            if r > 0:
                return 1 if diff > 0 else -1
            return -1 if diff > 0 else 1
        bits = 64
        while True:
            lo, hi = self.enclosure(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value; width about n * 2**-bits."""
        scale = 1 << bits
        lo = hi = self.rational
        for d, c in self.terms:
            root = isqrt(d * scale * scale)  # root <= sqrt(d)*scale < root + 1
            a = Fraction(root, scale)
            b = Fraction(root + 1, scale)
            if c > 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        return lo, hi

    def _cmp(self, other) -> int:
        return (self - SurdSum.coerce(other)).sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return not self.terms and self.rational == other
        if not isinstance(other, SurdSum):
            return NotImplemented
        return self.rational == other.rational and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rational) if not self.terms else hash((self.rational, self.terms))
        return self._hash

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __float__(self):
        if not self.terms:
            return float(self.rational)
        bits = 80
        while True:  # refine until cancellation no longer spoils the leading bits
            lo, hi = self.enclosure(bits)
            mid = (lo + hi) / 2
            if (hi - lo) * (1 << 55) <= abs(mid):
                return float(mid)
            bits *= 2

    def __str__(self):
        parts = []
        if self.rational != 0 or not self.terms:
            parts.append(_fmt_quad(self.rational.numerator, 0, self.rational.denominator, 0))
        for d, c in self.terms:
            parts.append(_fmt_quad(0, c.numerator, c.denominator, d))
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def decimal(self, digits: int = 30) -> str:
        return to_decimal(self, digits)


def _normalize(x: SurdSum) -> SurdSum:
    return SurdSum._raw(x.rational, x.terms)


def _rebuild(rational, terms):
    # re-enter the registry so pickled values stay canonical in this process
    return _normalize(SurdSum(rational, terms))


class QuadSurd(SurdSum):
    """``(a + b*sqrt(d)) / c`` with c > 0, gcd(a, b, c) = 1.

    Rationals are the case ``b == 0`` (then ``d == 0``).  Arithmetic between
    values of different fields promotes to :class:`SurdSum`.
    """

    __slots__ = ()

    def __init__(self, a: int = 0, b: int = 0, c: int = 1, d: int = 0):
        if c == 0:
            raise ZeroDivisionError("c must be nonzero")
        terms = [(d, Fraction(b, c))] if b and d else []
        SurdSum.__init__(self, Fraction(a, c), terms)
        if len(self.terms) > 1:  # pragma: no cover - single term input
            raise MixedRadicand("MixedRadicand")

    @classmethod
    def from_parts(cls, r, s=0, d: int = 0) -> "QuadSurd":
        """Value ``r + s*sqrt(d)`` for rationals r, s."""
        out = SurdSum(r, [(d, s)] if s and d else [])
        return SurdSum._raw(out.rational, out.terms)

    @property
    def d(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def c(self) -> int:
        den = self.rational.denominator
        if self.terms:
            s = self.terms[0][1]
            den = den * s.denominator // gcd(den, s.denominator)
        return den

    @property
    def a(self) -> int:
        return int(self.rational * self.c)

    @property
    def b(self) -> int:
        return int(self.terms[0][1] * self.c) if self.terms else 0

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, int]:
        """``(r, s, d)`` with value ``r + s*sqrt(d)``."""
        return (self.rational, self.terms[0][1], self.d) if self.terms else (self.rational, Fraction(0), 0)

    def conjugate(self) -> "QuadSurd":
        return SurdSum._raw(self.rational, tuple((d, -c) for d, c in self.terms))

    def canonical(self) -> str:
        return _fmt_quad(self.a, self.b, self.c, self.d)

    __str__ = canonical


def _pick_class(terms) -> type:
    return QuadSurd if len(terms) <= 1 else SurdSum


def _fmt_quad(a: int, b: int, c: int, d: int) -> str:
    if b == 0 or d == 0:
        return str(a) if c == 1 else f"{a}/{c}"
    rad = f"√{d}"
    if b == 1:
        sb = rad
    elif b == -1:
        sb = "-" + rad
    else:
        sb = f"{b}{rad}"
    if a == 0:
        num = sb
        return num if c == 1 else f"{num}/{c}"
    num = f"{a}{'+' if b > 0 else ''}{sb}"
    return num if c == 1 else f"({num})/{c}"


# -- parsing -----------------------------------------------------------------

_QUAD_RE = re.compile(
    r"""^(?P<open>\()?
        (?P<a>[+-]?\d+(?![\d√]))?
        (?:(?P<b>[+-]?\d*)√(?P<d>\d+))?
        (?(open)\))
        (?:/(?P<c>\d+))?$""",
    re.VERBOSE,
)


def _parse_quad(text: str) -> QuadSurd:
    m = _QUAD_RE.match(text)
    if m is None or (m.group("a") is None and m.group("d") is None):
        raise SurdParseError(f"cannot parse surd {text!r}")
    a = int(m.group("a") or 0)
    c = int(m.group("c") or 1)
    if c == 0:
        raise SurdParseError(f"zero denominator in {text!r}")
    if m.group("d") is None:
        return QuadSurd(a, 0, c, 0)
    bs = m.group("b")
    b = 1 if bs in ("", "+") else -1 if bs == "-" else int(bs)
    return QuadSurd(a, b, c, int(m.group("d")))


def parse_surd(text: str) -> SurdSum:
    """Inverse of ``str``: accepts ``√`` or ``sqrt(d)`` and ``" + "``-joined sums."""
    t = re.sub(r"sqrt\((\d+)\)", r"√\1", text.strip())
    t = t.replace("−", "-")
    pieces = [p.replace(" ", "") for p in re.split(r"\s\+\s", t)]
    total: SurdSum = QuadSurd(0)
    for p in pieces:
        if not p:
            raise SurdParseError(f"cannot parse surd {text!r}")
        total = total + _parse_quad(p)
    return total


# -- continued fractions -----------------------------------------------------

@dataclass(frozen=True, slots=True)
class TailSpec:
    """Purely periodic tail ``[p_1; p_2, ..., p_l, p_1, ...]``."""

    period: Word

    def __post_init__(self):
        if not isinstance(self.period, Word):
            object.__setattr__(self, "period", as_word(self.period))
        if len(self.period) == 0:
            raise ValueError("tail period must be nonempty")

    def rotate(self, n: int = 1) -> "TailSpec":
        n %= len(self.period)
        return TailSpec(self.period[n:] + self.period[:n])

    def __str__(self):
        return f"per({self.period})"


def as_tail(t) -> TailSpec:
    return t if isinstance(t, TailSpec) else TailSpec(as_word(t))


@lru_cache(maxsize=4096)
def _periodic(letters: tuple[int, ...]) -> QuadSurd:
    m = mobius_of_prefix(letters)
    p, pp, q, qp = m.p_cur, m.p_prev, m.q_cur, m.q_prev
    # x = (p x + pp)/(q x + qp)  =>  q x^2 + (qp - p) x - pp = 0
    disc = (p - qp) ** 2 + 4 * q * pp
    return QuadSurd(p - qp, 1, 2 * q, disc)


def periodic_value(t) -> QuadSurd:
    """Value of the purely periodic expansion ``[p_1; p_2, ..., p_l, x] = x``."""
    return _periodic(as_tail(t).period.letters)


def apply_mobius(m, x: SurdSum) -> SurdSum:
    return (m.p_cur * x + m.p_prev) / (m.q_cur * x + m.q_prev)


def eval_cf(prefix, tail) -> QuadSurd:
    """Exact ``[a_0; a_1, ..., a_n, tail]``; ``a_0`` may be 0, prefix may be empty."""
    prefix = tuple(prefix)
    x = periodic_value(tail)
    if not prefix:
        return x
    return _eval_quad(mobius_of_prefix(prefix), x)


def _eval_quad(m, x: QuadSurd) -> QuadSurd:
    r, s, d = x.coeffs
    nr, ns = m.p_cur * r + m.p_prev, m.p_cur * s
    dr, ds = m.q_cur * r + m.q_prev, m.q_cur * s
    # (nr + ns t)/(dr + ds t), t = sqrt(d)
    den = dr * dr - ds * ds * d
    if den == 0:
        raise ZeroDivisionError("degenerate Moebius evaluation")
    rr = (nr * dr - ns * ds * d) / den
    ss = (ns * dr - nr * ds) / den
    return SurdSum._raw(rr, ((d, ss),) if ss != 0 and d else ())


def add(x: SurdSum, y: SurdSum) -> QuadSurd:
    """Sum within one quadratic field; mixed radicands raise ``MixedRadicand``."""
    x, y = SurdSum.coerce(x), SurdSum.coerce(y)
    if len(x.terms) > 1 or len(y.terms) > 1:
        raise MixedRadicand("MixedRadicand")
    if x.terms and y.terms and x.terms[0][0] != y.terms[0][0]:
        raise MixedRadicand("MixedRadicand")
    return x + y


def compare(x, y) -> int:
    """Exact sign of ``x - y``."""
    return (SurdSum.coerce(x) - SurdSum.coerce(y)).sign()


def floor(x) -> int:
    x = SurdSum.coerce(x)
    if x.is_rational():
        return x.rational.numerator // x.rational.denominator
    bits = 64
    while True:
        lo, hi = x.enclosure(bits)
        fl = lo.numerator // lo.denominator
        if fl == hi.numerator // hi.denominator:
            return fl
        bits *= 2


def to_decimal(x, digits: int) -> str:
    """Round-half-even decimal with exactly ``digits`` fractional digits."""
    if digits < 1:
        raise ValueError("digits must be positive")
    x = SurdSum.coerce(x)
    scale = 10 ** digits
    if x.is_rational():
        n = round(x.rational * scale)
    else:
        # irrational: x*scale is never an integer or half-integer
        n = floor(x * scale + Fraction(1, 2))
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"
