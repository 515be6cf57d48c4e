"""Core word representation, Parikh machinery, and text I/O.

Words are finite sequences of 1-based letters from {1..n}. The alphabet size n
is carried on the word itself rather than inferred per operation, because
cruciality depends on n even when a candidate prefix does not yet use every
letter. All factor ranges are half-open (start, end].
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, FormatError, ParseError

MAX_ALPHABET = 64


class WordFormat(enum.Enum):
    COMPACT = "compact"
    SPACED = "spaced"


@dataclass(frozen=True)
class Word:
    """Immutable word over the alphabet {1..alphabet_size}."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        n = self.alphabet_size
        if not 1 <= n <= MAX_ALPHABET:
            raise DomainError(f"alphabet_size must be in 1..{MAX_ALPHABET}, got {n}")
        for a in self.letters:
            if not isinstance(a, int) or not 1 <= a <= n:
                raise DomainError(f"letter {a!r} outside alphabet 1..{n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        fmt = WordFormat.COMPACT if self.alphabet_size <= 9 else WordFormat.SPACED
        return render_word(self, fmt)

    def concat(self, other: "Word") -> "Word":
        n = max(self.alphabet_size, other.alphabet_size)
        return Word(self.letters + other.letters, n)

    def append(self, letter: int) -> "Word":
        # letter may exceed the current alphabet; the alphabet widens to fit
        n = max(self.alphabet_size, letter)
        return Word(self.letters + (letter,), n)

    def reversed(self) -> "Word":
        return Word(self.letters[::-1], self.alphabet_size)


def word(letters: Iterable[int], alphabet_size: int | None = None) -> Word:
    """Build a Word, inferring the alphabet from the max letter when not given."""
    ls = tuple(letters)
    if alphabet_size is None:
        alphabet_size = max(ls) if ls else 1
    return Word(ls, alphabet_size)


EMPTY_WORD = Word((), 1)


class ParikhTable:
    """Prefix letter-count table.

    counts[i][c-1] is the number of occurrences of letter c in the length-i
    prefix, so the Parikh vector of the factor (i, j] is counts[j] - counts[i].
    """

    def __init__(self, w: Word):
        n = w.alphabet_size
        length = len(w)
        counts = np.zeros((length + 1, n), dtype=np.int64)
        if length:
            hot = np.zeros((length, n), dtype=np.int64)
            hot[np.arange(length), np.asarray(w.letters) - 1] = 1
            np.cumsum(hot, axis=0, out=counts[1:])
        self.counts = counts
        self.word = w

    def vector(self, start: int, end: int) -> np.ndarray:
        self._check_range(start, end)
        return self.counts[end] - self.counts[start]

    def _check_range(self, start: int, end: int) -> None:
        if not 0 <= start <= end <= len(self.word):
            raise IndexError(
                f"factor range ({start}, {end}] invalid for length {len(self.word)}"
            )


def parikh(w: Word, start: int, end: int) -> tuple[int, ...]:
    """Parikh vector of the factor (start, end] as a plain tuple."""
    if not 0 <= start <= end <= len(w):
        raise IndexError(f"factor range ({start}, {end}] invalid for length {len(w)}")
    counts = [0] * w.alphabet_size
    for i in range(start, end):
        counts[w.letters[i] - 1] += 1
    return tuple(counts)


def packed_prefixes(letters: Sequence[int], shift: int | None = None) -> tuple[list[int], int]:
    """Prefix Parikh vectors packed into single integers, one lane per letter.

    Lane width defaults to 16 bits, which is collision-free for words up to
    65535 letters; longer words get 32-bit lanes. Returns (prefixes, shift)
    where prefixes[i] encodes the length-i prefix and block comparisons reduce
    to integer subtraction.
    """
    if shift is None:
        shift = 16 if len(letters) < (1 << 16) else 32
    p = 0
    out = [0] * (len(letters) + 1)
    for i, a in enumerate(letters):
        p += 1 << ((a - 1) * shift)
        out[i + 1] = p
    return out, shift


def parse_word(
    text: str,
    fmt: WordFormat = WordFormat.COMPACT,
    alphabet_size: int | None = None,
) -> Word:
    """Parse a word from text.

    Compact is a contiguous digit string (letters 1..9); Spaced is
    whitespace-separated decimal integers. The alphabet defaults to the
    largest letter seen; an explicit alphabet_size may widen it.
    """
    if fmt is WordFormat.COMPACT:
        letters = []
        for ch in text.strip():
            if not ch.isdigit():
                raise ParseError(f"compact words are digit strings, got {ch!r}")
            if ch == "0":
                raise ParseError("letter 0 is not part of any alphabet")
            letters.append(int(ch))
    elif fmt is WordFormat.SPACED:
        letters = []
        for tok in text.split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"expected an integer letter, got {tok!r}") from None
            if v < 1:
                raise ParseError(f"letters are positive, got {v}")
            letters.append(v)
    else:
        raise ParseError(f"unknown word format {fmt!r}")
    inferred = max(letters) if letters else 1
    if alphabet_size is not None:
        if alphabet_size < inferred:
            raise ParseError(
                f"alphabet_size {alphabet_size} smaller than largest letter {inferred}"
            )
        inferred = alphabet_size
    if inferred > MAX_ALPHABET:
        raise ParseError(f"alphabet size {inferred} exceeds the maximum {MAX_ALPHABET}")
    return Word(tuple(letters), inferred)


def render_word(w: Word, fmt: WordFormat = WordFormat.COMPACT) -> str:
    if fmt is WordFormat.COMPACT:
        if w.alphabet_size > 9:
            raise FormatError("compact format requires alphabet_size <= 9")
        return "".join(str(a) for a in w.letters)
    if fmt is WordFormat.SPACED:
        return " ".join(str(a) for a in w.letters)
    raise FormatError(f"unknown word format {fmt!r}")


def read_corpus(source: str | os.PathLike | Iterable[str]) -> list[Word]:
    """Read spaced-format words, one per line; '#' lines are comments."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        lines = list(source)
    out = []
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_word(stripped, WordFormat.SPACED))
    return out
