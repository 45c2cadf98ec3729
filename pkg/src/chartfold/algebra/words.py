"""Words in the symmetric and braid groups and their text syntax.

Permutation letters are written ``t<i>`` and braid letters ``s<i>`` with a
trailing ``'`` for the inverse. Letters sit space-separated inside parentheses;
``()`` is the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from ..errors import DegreeError, KindError, ParseError
from .permutations import Permutation

WordKind = Literal["perm", "braid"]

_LETTER_PATTERN = re.compile(r"^(?P<kind>[ts])(?P<index>[1-9][0-9]*)(?P<inverse>')?$")


@dataclass(frozen=True, slots=True)
class Letter:
    """One generator: ``tau_index`` when perm-kind, ``sigma_index ** sign`` when braid-kind."""

    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.index < 1:
            raise DegreeError(f"Letter index must be positive, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def with_sign(self, sign: int) -> Letter:
        return Letter(self.index, sign)


@dataclass(frozen=True, slots=True)
class Word:
    """Homogeneous sequence of letters; perm-kind words only carry positive letters."""

    letters: tuple[Letter, ...] = ()
    kind: WordKind = "braid"

    def __post_init__(self) -> None:
        if self.kind not in ("perm", "braid"):
            raise KindError(f"Unknown word kind: {self.kind}")
        if self.kind == "perm" and any(letter.sign != 1 for letter in self.letters):
            raise KindError("Permutation words cannot carry inverse letters")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item: int) -> Letter:
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        if self.letters and other.letters and self.kind != other.kind:
            raise KindError("Cannot concatenate perm-kind and braid-kind words")
        kind = self.kind if self.letters else other.kind
        return Word(self.letters + other.letters, kind)

    def slice(self, start: int, stop: int | None = None) -> Word:
        return Word(self.letters[start:stop], self.kind)

    def inverse(self) -> Word:
        if self.kind == "perm":
            return Word(tuple(reversed(self.letters)), "perm")
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)), "braid")

    def max_index(self) -> int:
        return max((letter.index for letter in self.letters), default=0)

    def forget_signs(self) -> Word:
        return Word(tuple(Letter(letter.index) for letter in self.letters), "perm")

    def __str__(self) -> str:
        return format_word(self)


def perm_word(indices: Iterable[int]) -> Word:
    """Perm-kind word from 1-based generator indices."""

    return Word(tuple(Letter(index) for index in indices), "perm")


def braid_word(signed: Iterable[int]) -> Word:
    """Braid-kind word from signed indices, ``-2`` meaning ``s2'``."""

    return Word(tuple(Letter(abs(value), 1 if value > 0 else -1) for value in signed), "braid")


def check_degree(word: Word, n: int) -> None:
    if n < 2:
        raise DegreeError(f"Degree must be at least 2, got {n}")
    if word.max_index() >= n:
        raise DegreeError(f"Letter index {word.max_index()} does not fit degree {n}")


def perm_image(word: Word, n: int) -> Permutation:
    """Left-to-right product of the transpositions the letters map to."""

    check_degree(word, n)
    result = Permutation.identity(n)
    for letter in word:
        result = result.then(Permutation.adjacent(letter.index, n))
    return result


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""

    if word.kind == "perm":
        raise KindError("free_reduce expects a braid-kind word")
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack), "braid")


def format_letter(letter: Letter, kind: WordKind) -> str:
    if kind == "perm":
        return f"t{letter.index}"
    return f"s{letter.index}" + ("'" if letter.sign < 0 else "")


def format_word(word: Word) -> str:
    return "(" + " ".join(format_letter(letter, word.kind) for letter in word) + ")"


def parse_word(
    text: str, *, kind: WordKind | None = None, line: int = 1, column: int = 1
) -> Word:
    """Parse ``(t1 t2)`` or ``(s1 s2')``; ``kind`` resolves the empty word."""

    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError(f"Expected a parenthesised word, got {text!r}", line=line, column=column)
    letters: list[Letter] = []
    seen_kind: WordKind | None = None
    for token in stripped[1:-1].split():
        match = _LETTER_PATTERN.match(token)
        if not match:
            raise ParseError(f"Bad letter {token!r}", line=line, column=column)
        token_kind: WordKind = "perm" if match["kind"] == "t" else "braid"
        if token_kind == "perm" and match["inverse"]:
            raise ParseError(f"Permutation letter cannot be inverted: {token!r}", line=line, column=column)
        if seen_kind is not None and seen_kind != token_kind:
            raise ParseError("Mixed perm and braid letters in one word", line=line, column=column)
        seen_kind = token_kind
        letters.append(Letter(int(match["index"]), -1 if match["inverse"] else 1))
    if kind is not None and seen_kind is not None and seen_kind != kind:
        raise ParseError(f"Expected a {kind}-kind word, got {text!r}", line=line, column=column)
    return Word(tuple(letters), seen_kind or kind or "braid")


__all__ = [
    "Letter",
    "Word",
    "WordKind",
    "braid_word",
    "check_degree",
    "format_letter",
    "format_word",
    "free_reduce",
    "parse_word",
    "perm_image",
    "perm_word",
]
