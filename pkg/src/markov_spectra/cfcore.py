"""Finite words over {1, 2}, continuants, convergents and Moebius maps.

Words are immutable tuples of partial quotients.  The literal grammar used
throughout the package is a whitespace separated list of tokens ``1``, ``2``,
``1_N`` or ``2_N`` (a run of N copies); exactly one single-letter token may
carry a ``*`` suffix to mark position zero, e.g. ``"1 2_9 1 2* 2_6 1"``.
Run lengths may also be written as ``2_{2k-1}`` when a value for ``k`` is
supplied to the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

LETTERS = (1, 2)


class WordError(ValueError):
    """Malformed word literal or letter outside {1, 2}."""


class EmptyWord(ValueError):
    pass


class NoDifference(ValueError):
    pass


_TOKEN = re.compile(r"^([12])(?:_(\{[^}]*\}|\d+))?(\*)?$")
_COMPACT = re.compile(r"^(?:[12]\*?){2,}$")
_KEXPR = re.compile(r"^([+-]?\d*)k([+-]\d+)?$")


def _run_length(text: str, k: int | None) -> int:
    if not text.startswith("{"):
        return int(text)
    body = text[1:-1].replace("−", "-").replace(" ", "")
    if re.fullmatch(r"\d+", body):
        return int(body)
    m = _KEXPR.match(body)
    if m is None:
        raise WordError(f"cannot read run length {text!r}")
    if k is None:
        raise WordError(f"parametric run length {text!r} needs an explicit k")
    coef = m.group(1)
    coef = 1 if coef in ("", "+") else -1 if coef == "-" else int(coef)
    return coef * k + int(m.group(2) or 0)


def _parse_tokens(text: str, k: int | None) -> tuple[tuple[int, ...], int | None]:
    letters: list[int] = []
    mark = None
    for tok in text.split():
        if _COMPACT.match(tok):  # "21222" or "112*2": one letter per digit
            for ch in tok:
                if ch == "*":
                    if mark is not None:
                        raise WordError(f"more than one '*' in {text!r}")
                    mark = len(letters) - 1
                else:
                    letters.append(int(ch))
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise WordError(f"bad token {tok!r} in {text!r}")
        letter = int(m.group(1))
        count = 1 if m.group(2) is None else _run_length(m.group(2), k)
        if count < 0:
            raise WordError(f"negative run length in {tok!r}")
        if m.group(3):
            if mark is not None:
                raise WordError(f"more than one '*' in {text!r}")
            if count != 1:
                raise WordError(f"'*' must sit on a single letter, got {tok!r}")
            mark = len(letters)
        letters.extend([letter] * count)
    return tuple(letters), mark


def _format_runs(letters: Sequence[int], mark: int | None = None) -> str:
    out = []
    i = 0
    n = len(letters)
    while i < n:
        if i == mark:
            out.append(f"{letters[i]}*")
            i += 1
            continue
        j = i
        while j < n and letters[j] == letters[i] and j != mark:
            j += 1
        run = j - i
        out.append(str(letters[i]) if run == 1 else f"{letters[i]}_{run}")
        i = j
    return " ".join(out)


@dataclass(frozen=True, slots=True)
class Word:
    """A finite (possibly empty) word over {1, 2}."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a not in LETTERS:
                raise WordError(f"letter {a!r} not in {{1, 2}}")

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Word":
        letters, mark = _parse_tokens(text, k)
        if mark is not None:
            raise WordError(f"unexpected '*' in plain word {text!r}")
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + tuple(other))

    def reverse(self) -> "Word":
        return Word(self.letters[::-1])

    def is_palindrome(self) -> bool:
        return self.letters == self.letters[::-1]

    def __str__(self) -> str:
        return _format_runs(self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


@dataclass(frozen=True, slots=True)
class MarkedWord:
    """A word with a designated position zero (the asterisk).

    Indices used by the public API are relative to the mark: the letters
    occupy positions ``-mark .. len - 1 - mark``.
    """

    word: Word
    mark: int

    def __post_init__(self):
        if not isinstance(self.word, Word):
            object.__setattr__(self, "word", Word(tuple(self.word)))
        if not 0 <= self.mark < len(self.word):
            raise WordError(f"mark {self.mark} outside word of length {len(self.word)}")

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "MarkedWord":
        letters, mark = _parse_tokens(text, k)
        if mark is None:
            raise WordError(f"marked word {text!r} has no '*'")
        return cls(Word(letters), mark)

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    @property
    def left(self) -> int:
        """Number of letters strictly left of the mark."""
        return self.mark

    @property
    def right(self) -> int:
        """Number of letters strictly right of the mark."""
        return len(self.word) - 1 - self.mark

    def __len__(self) -> int:
        return len(self.word)

    def at(self, i: int) -> int:
        return self.word.letters[i + self.mark]

    def positions(self) -> range:
        return range(-self.mark, len(self.word) - self.mark)

    def extend(self, left: Iterable[int] = (), right: Iterable[int] = ()) -> "MarkedWord":
        """Prepend ``left`` (written left to right) and append ``right``."""
        left = tuple(left)
        return MarkedWord(Word(left + self.letters + tuple(right)), self.mark + len(left))

    def transpose(self) -> "MarkedWord":
        """Mirror image; lambda values are invariant under it."""
        return MarkedWord(self.word.reverse(), len(self.word) - 1 - self.mark)

    def contains_at(self, other: "MarkedWord") -> bool:
        """True if ``other`` occurs in ``self`` with the two marks aligned."""
        if other.left > self.left or other.right > self.right:
            return False
        return all(self.at(i) == other.at(i) for i in other.positions())

    def agrees_with(self, other: "MarkedWord") -> bool:
        """True if the two words coincide on every position both define."""
        lo = max(-self.left, -other.left)
        hi = min(self.right, other.right)
        return all(self.at(i) == other.at(i) for i in range(lo, hi + 1))

    def __str__(self) -> str:
        return _format_runs(self.letters, self.mark)

    def __repr__(self) -> str:
        return f"MarkedWord({str(self)!r})"


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(tuple(w))


@dataclass(frozen=True, slots=True)
class MobiusMap:
    """Matrix [[p_cur, p_prev], [q_cur, q_prev]] acting as x -> (p x + p') / (q x + q')."""

    p_cur: int = 1
    p_prev: int = 0
    q_cur: int = 0
    q_prev: int = 1

    def step(self, a: int) -> "MobiusMap":
        return MobiusMap(a * self.p_cur + self.p_prev, self.p_cur,
                         a * self.q_cur + self.q_prev, self.q_cur)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(
            self.p_cur * other.p_cur + self.p_prev * other.q_cur,
            self.p_cur * other.p_prev + self.p_prev * other.q_prev,
            self.q_cur * other.p_cur + self.q_prev * other.q_cur,
            self.q_cur * other.p_prev + self.q_prev * other.q_prev,
        )

    @property
    def determinant(self) -> int:
        return self.p_cur * self.q_prev - self.p_prev * self.q_cur

    @property
    def trace(self) -> int:
        return self.p_cur + self.q_prev

    def __call__(self, x):
        if x is None:  # the infinite tail: x -> oo
            return Fraction(self.p_cur, self.q_cur)
        return (self.p_cur * x + self.p_prev) / (self.q_cur * x + self.q_prev)


def mobius_of_prefix(w: Iterable[int]) -> MobiusMap:
    """Moebius map of the partial quotients ``w = a_0 a_1 ... a_n``.

    Applied to ``x`` it yields ``[a_0; a_1, ..., a_n, x]``.  ``a_0`` may be 0.
    """
    p, pp, q, qp = 1, 0, 0, 1
    for a in w:
        p, pp = a * p + pp, p
        q, qp = a * q + qp, q
    return MobiusMap(p, pp, q, qp)


def continuant(w: Iterable[int]) -> int:
    """q(a_1 ... a_l): denominator of [0; a_1, ..., a_l]; q(empty) = 1."""
    q, qp = 1, 0
    for a in w:
        q, qp = a * q + qp, q
    return q


def numerator(w: Iterable[int]) -> int:
    """p(a_1 ... a_l): numerator of [0; a_1, ..., a_l]; equals q(a_2 ... a_l)."""
    w = tuple(w)
    if not w:
        raise EmptyWord("EmptyWord")
    return continuant(w[1:])


def convergent(w) -> Fraction:
    """[0; a_1, ..., a_l] = p(w) / q(w)."""
    w = tuple(as_word(w))
    if not w:
        raise EmptyWord("EmptyWord")
    return Fraction(continuant(w[1:]), continuant(w))


def beta(w) -> Fraction:
    """q(a_1 ... a_{l-1}) / q(a_1 ... a_l) = [0; a_l, ..., a_1]."""
    w = tuple(as_word(w))
    if not w:
        raise EmptyWord("EmptyWord")
    return Fraction(continuant(w[:-1]), continuant(w))


def compare_by_first_difference(common_prefix, a_next: int, b_next: int,
                                position_parity: int | None = None) -> int:
    """Order two continued fractions that first differ after ``common_prefix``.

    ``common_prefix`` holds ``a_0, ..., a_n`` and the expansions continue with
    ``a_next`` and ``b_next`` respectively.  Returns +1 when the ``a_next``
    expansion is larger and -1 when the ``b_next`` one is.  ``position_parity``
    overrides ``n`` (only its parity matters).
    """
    if a_next == b_next:
        raise NoDifference("NoDifference")
    n = len(tuple(common_prefix)) - 1 if position_parity is None else position_parity
    s = (a_next - b_next) * (-1 if n % 2 == 0 else 1)
    return 1 if s > 0 else -1
