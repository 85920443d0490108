"""Braid words in the Artin generators.

A word is a tuple of nonzero signed integers together with its strand count:
letter ``k`` is sigma_k and ``-k`` is its inverse. Two input syntaxes are
accepted, plain integers (``"1 -2 1"``) and generator tokens
(``"s1 s2^-1 s1^2"``); output is always the integer form, with ``e`` for the
empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import GeneratorOutOfRange, StrandCountMismatch, WordSyntaxError

EMPTY_WORD_TEXT = "e"

_TOKEN = re.compile(r"[sS](\d+)(?:\^([+-]?\d+))?$|([+-]?\d+)$")


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be positive, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for k in self.letters:
            if k == 0 or abs(k) > self.n - 1:
                raise GeneratorOutOfRange(f"letter {k} is not a generator of B_{self.n}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True)
class StrandPermutation:
    """``mapping[i-1]`` is the lower point reached by the strand starting at higher point i."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise ValueError(f"{self.mapping} is not a permutation of 1..{len(self.mapping)}")

    @classmethod
    def identity(cls, n: int) -> "StrandPermutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    def then(self, other: "StrandPermutation") -> "StrandPermutation":
        """Follow this permutation, then ``other`` (u's crossings sit above v's)."""
        return StrandPermutation(tuple(other(j) for j in self.mapping))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.mapping, 1))

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping, 1))


def word(n: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(n, tuple(letters))


def parse_word(text: str, n: int) -> BraidWord:
    letters: list[int] = []
    stripped = text.strip()
    if stripped in ("", EMPTY_WORD_TEXT):
        return BraidWord(n, ())
    pos = 0
    for tok in re.split(r"[\s,]+", stripped):
        at = text.find(tok, pos)
        pos = at + len(tok)
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(f"bad token {tok!r}", text, at)
        if m.group(3) is not None:
            k = int(m.group(3))
            if k == 0:
                raise WordSyntaxError("letter 0 is not a generator", text, at)
            letters.append(k)
        else:
            k = int(m.group(1))
            if k == 0:
                raise WordSyntaxError("generator index must be positive", text, at)
            power = int(m.group(2)) if m.group(2) is not None else 1
            letters.extend([k if power > 0 else -k] * abs(power))
    for k in letters:
        if abs(k) > n - 1:
            raise GeneratorOutOfRange(f"sigma_{abs(k)} is not a generator of B_{n}")
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(map(str, w.letters)) if w.letters else EMPTY_WORD_TEXT


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-k for k in reversed(w.letters)))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.n != v.n:
        raise StrandCountMismatch(f"cannot compose words in B_{u.n} and B_{v.n}")
    return BraidWord(u.n, u.letters + v.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for k in w.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(w.n, tuple(stack))


def is_freely_reduced(w: BraidWord) -> bool:
    return all(x != -y for x, y in zip(w.letters, w.letters[1:]))


def permutation(w: BraidWord) -> StrandPermutation:
    # at_position[p] = strand currently at position p+1
    at_position = list(range(1, w.n + 1))
    for k in w.letters:
        i = abs(k) - 1
        at_position[i], at_position[i + 1] = at_position[i + 1], at_position[i]
    mapping = [0] * w.n
    for pos, strand in enumerate(at_position, 1):
        mapping[strand - 1] = pos
    return StrandPermutation(tuple(mapping))
