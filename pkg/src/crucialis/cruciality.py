"""Cruciality and maximality predicates, suffix-chain decomposition, profiles.

A word W over {1..n} is crucial for exponent k when W itself contains no
abelian k-th power but W.x gains one (necessarily as a suffix) for every
letter x. For such a word each letter x determines a minimal suffix D_x with
D_x.x an abelian k-th power; after renaming letters so the suffix lengths
increase, the chain D_1 < D_2 < ... < D_n nests and D_n spans the whole word
whenever the word is minimal. decompose() materializes that chain; normalize()
computes the renaming.

The occurrence profile (a0; a1 <= ... <= a_{n-1}) records how often letter n
occurs (a0) and the sorted counts of the remaining letters. For exponent 3 a
short list of profiles is impossible in crucial words; profile_violations
flags them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    DomainError,
    IncompleteChainError,
    NamingError,
    NonNestedError,
    NotCrucialError,
)
from .powers import is_abelian_power_free, suffix_abelian_power
from .words import Word


def _require_candidate(w: Word, k: int) -> None:
    if k < 2:
        raise DomainError(f"exponent k must be at least 2, got {k}")
    if len(w) == 0:
        raise DomainError("the empty word is never a crucial-word candidate")


def is_crucial(w: Word, k: int) -> bool:
    """True iff w is abelian-k-power-free and every letter extension is not."""
    _require_candidate(w, k)
    if not is_abelian_power_free(w, k):
        return False
    for x in range(1, w.alphabet_size + 1):
        if suffix_abelian_power(w.append(x), k) is None:
            return False
    return True


def is_maximal(w: Word, k: int) -> bool:
    """True iff w is free but gains a power on appending or prepending any letter.

    The prefix direction reuses the suffix test on the reversed word: abelian
    equality of blocks survives reversal, so x.w has an abelian power prefix
    exactly when reverse(w).x has one as a suffix.
    """
    _require_candidate(w, k)
    if not is_abelian_power_free(w, k):
        return False
    rev = w.reversed()
    for x in range(1, w.alphabet_size + 1):
        if suffix_abelian_power(w.append(x), k) is None:
            return False
        if suffix_abelian_power(rev.append(x), k) is None:
            return False
    return True


@dataclass(frozen=True)
class CrucialDecomposition:
    """The nested suffix chain of a crucial word.

    delta_lengths[i-1] is |D_i|; gaps[i-2] is the factor Y_i with
    D_i = Y_i D_{i-1} for i = 2..n; blocks[i-1] holds the k blocks of the
    abelian power D_i.i (the appended letter i included in the last block).
    """

    word: Word
    exponent: int
    delta_lengths: tuple[int, ...]
    gaps: tuple[Word, ...]
    blocks: tuple[tuple[Word, ...], ...]

    def delta(self, i: int) -> Word:
        """The suffix D_i of the input word."""
        if not 1 <= i <= len(self.delta_lengths):
            raise IndexError(f"no suffix D_{i} in a chain of {len(self.delta_lengths)}")
        m = len(self.word)
        return Word(self.word.letters[m - self.delta_lengths[i - 1] :], self.word.alphabet_size)


def _suffix_block_lengths(w: Word, k: int) -> list[int]:
    """b_x for each letter x: the minimal block length completing w.x."""
    out = []
    for x in range(1, w.alphabet_size + 1):
        b = suffix_abelian_power(w.append(x), k)
        if b is None:
            raise NotCrucialError(f"appending {x} creates no abelian {k}-power suffix")
        out.append(b)
    return out


def _rank_by_block_length(bs: list[int]) -> tuple[int, ...]:
    """Renaming that sorts letters by completing-suffix length.

    Returns perm with perm[x-1] = new name of letter x. Equal lengths admit no
    strictly nested chain, so they are rejected. (For genuinely crucial words
    equal lengths cannot occur: the Parikh vector of the completed block pins
    down the appended letter. The guard protects against misuse.)
    """
    order = sorted(range(len(bs)), key=lambda i: (bs[i], i))
    for a, b in zip(order, order[1:]):
        if bs[a] == bs[b]:
            raise NonNestedError(a + 1, b + 1)
    perm = [0] * len(bs)
    for rank, idx in enumerate(order, start=1):
        perm[idx] = rank
    return tuple(perm)


def decompose(w: Word, k: int) -> CrucialDecomposition:
    """Materialize the suffix chain of a crucial word.

    The letters must already be named so the chain nests (NamingError
    otherwise; run normalize first). The final suffix D_n must span the whole
    word, which holds for minimal crucial words but can fail for longer ones
    (IncompleteChainError).
    """
    if not is_crucial(w, k):
        raise NotCrucialError("decompose is only defined for crucial words")
    n = w.alphabet_size
    m = len(w)
    bs = _suffix_block_lengths(w, k)
    lengths = [k * b - 1 for b in bs]
    for i in range(n - 1):
        if lengths[i] == lengths[i + 1]:
            raise NonNestedError(i + 1, i + 2)
        if lengths[i] > lengths[i + 1]:
            raise NamingError(
                f"suffix of letter {i + 1} is longer than that of letter {i + 2}; "
                "letters are not named in chain order (run normalize first)"
            )
    if lengths[-1] != m:
        raise IncompleteChainError(
            f"longest suffix D_{n} has length {lengths[-1]} but the word has length {m}"
        )
    gaps = tuple(
        Word(w.letters[m - lengths[i] : m - lengths[i - 1]], n) for i in range(1, n)
    )
    blocks = []
    for i in range(1, n + 1):
        b = bs[i - 1]
        ext = w.letters[m - (k * b - 1) :] + (i,)
        blocks.append(tuple(Word(ext[j * b : (j + 1) * b], n) for j in range(k)))
    return CrucialDecomposition(
        word=w,
        exponent=k,
        delta_lengths=tuple(lengths),
        gaps=gaps,
        blocks=tuple(blocks),
    )


def normalize(w: Word, k: int) -> tuple[Word, tuple[int, ...]]:
    """Rename letters so the suffix chain lengths increase with the letter.

    Returns (renamed word, perm) where perm[x-1] is the new name of original
    letter x. Words already in chain order come back unchanged with the
    identity renaming.
    """
    if not is_crucial(w, k):
        raise NotCrucialError("normalize is only defined for crucial words")
    bs = _suffix_block_lengths(w, k)
    perm = _rank_by_block_length(bs)
    renamed = Word(tuple(perm[a - 1] for a in w.letters), w.alphabet_size)
    return renamed, perm


@dataclass(frozen=True)
class OccurrenceProfile:
    """(a0; a1 <= ... <= a_{n-1}): count of letter n, then sorted other counts."""

    a0: int
    rest: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b < a for a, b in zip(self.rest, self.rest[1:])):
            raise DomainError("rest counts must be non-decreasing")

    def __str__(self) -> str:
        return f"({self.a0}; {', '.join(str(a) for a in self.rest)})"


def occurrence_profile(w: Word) -> OccurrenceProfile:
    counts = [0] * w.alphabet_size
    for a in w.letters:
        counts[a - 1] += 1
    return OccurrenceProfile(a0=counts[-1], rest=tuple(sorted(counts[:-1])))


class ViolationTag(enum.Enum):
    """Profile constraints that crucial abelian-cube-free words cannot break."""

    DIVISIBILITY = "DIVISIBILITY"
    PAIR_3_3 = "PAIR_3_3"
    TRIPLE_6_6_6 = "TRIPLE_6_6_6"
    TRIPLE_3_6_6 = "TRIPLE_3_6_6"
    QUINT_2_3_6_9_9 = "QUINT_2_3_6_9_9"


class ViolationReport(list):
    """List of ViolationTag with an optional applicability note."""

    note: str | None = None


def profile_violations(p: OccurrenceProfile, k: int = 3) -> ViolationReport:
    """Every constraint the profile breaks; empty means consistent.

    The four structural constraints are proved for exponent 3 only. For any
    other exponent the check degrades to the divisibility congruences (each
    rest count divisible by k, a0 congruent to k-1 mod k) and the report
    carries a note saying so.
    """
    if k < 2:
        raise DomainError(f"exponent k must be at least 2, got {k}")
    report = ViolationReport()
    if p.a0 % k != k - 1 or any(a % k for a in p.rest):
        report.append(ViolationTag.DIVISIBILITY)
    if k != 3:
        report.note = "structural constraints are proved for exponent 3 only; divisibility checked"
        return report
    rest = p.rest
    threes = rest.count(3)
    sixes = rest.count(6)
    if threes >= 2:
        report.append(ViolationTag.PAIR_3_3)
    if sixes >= 3:
        report.append(ViolationTag.TRIPLE_6_6_6)
    if threes >= 1 and sixes >= 2:
        report.append(ViolationTag.TRIPLE_3_6_6)
    if p.a0 == 2 and rest[:4] == (3, 6, 9, 9):
        report.append(ViolationTag.QUINT_2_3_6_9_9)
    return report
