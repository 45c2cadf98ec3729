"""Fox 3-colourings of braid closures, held as transpositions of the symmetric group on 3 letters."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..algebra.permutations import Permutation
from ..algebra.words import Letter, Word
from ..errors import ColoringError, DegreeError, KindError, ParseError
from ..hurwitz.systems import Transposition

COLORS = (Transposition(1, 2), Transposition(2, 3), Transposition(1, 3))
_COLOR_PATTERN = re.compile(r"\(\s*([123])\s*([123])\s*\)")


@dataclass(frozen=True, slots=True)
class ColorVector:
    """One colour per braid strand, read bottom to top."""

    colors: tuple[Transposition, ...]

    def __post_init__(self) -> None:
        for color in self.colors:
            if color not in COLORS:
                raise DegreeError(f"{color} is not a colour of the 3-fold cover")

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self) -> Iterator[Transposition]:
        return iter(self.colors)

    def __getitem__(self, index: int) -> Transposition:
        return self.colors[index]

    def is_constant(self) -> bool:
        return len(set(self.colors)) <= 1

    def conjugate_by(self, g: Permutation) -> ColorVector:
        return ColorVector(tuple(color.conjugate_by(g) for color in self.colors))

    def normalized(self) -> ColorVector:
        """Globally recoloured so the first strand carries ``(1 2)``."""

        if not self.colors:
            return self
        for g in (Permutation.identity(3), *(c.as_permutation(3) for c in COLORS)):
            if self.colors[0].conjugate_by(g) == COLORS[0]:
                return self.conjugate_by(g)
        raise AssertionError("unreachable: S3 acts transitively on transpositions")

    def __str__(self) -> str:
        return ",".join(f"({color.a}{color.b})" for color in self.colors)


def parse_color_vector(text: str) -> ColorVector:
    """Read ``(12),(23),(13)``; spaces inside the brackets are allowed."""

    stripped = text.strip()
    matches = list(_COLOR_PATTERN.finditer(stripped))
    leftover = _COLOR_PATTERN.sub("", stripped).replace(",", "").strip()
    if not matches or leftover:
        raise ParseError(f"Cannot read colour vector {text!r}")
    try:
        return ColorVector(tuple(Transposition(int(m[1]), int(m[2])) for m in matches))
    except DegreeError as exc:
        raise ParseError(str(exc)) from exc


def _check_letter(cv: ColorVector, letter: Letter) -> None:
    if not 1 <= letter.index <= len(cv) - 1:
        raise DegreeError(f"Letter index {letter.index} outside 1..{len(cv) - 1}")


def color_dynamics(cv: ColorVector, letter: Letter) -> ColorVector:
    """Push the colours through one crossing of the braid."""

    _check_letter(cv, letter)
    j = letter.index - 1
    x, y = cv.colors[j], cv.colors[j + 1]
    if letter.sign > 0:
        pair = (y, x.conjugate_by_swap(y))
    else:
        pair = (y.conjugate_by_swap(x), x)
    return ColorVector(cv.colors[:j] + pair + cv.colors[j + 2 :])


def apply_braid(cv: ColorVector, beta: Word) -> ColorVector:
    if beta.kind != "braid":
        raise KindError("Colour dynamics need a braid word")
    for letter in beta:
        cv = color_dynamics(cv, letter)
    return cv


def is_closure_coloring(beta: Word, cv: ColorVector) -> bool:
    return apply_braid(cv, beta) == cv


def _candidates(strands: int) -> Iterable[ColorVector]:
    for colors in itertools.product(COLORS, repeat=strands):
        yield ColorVector(colors)


def fox_colorings(beta: Word, strands: int, *, normalize: bool = True) -> set[ColorVector]:
    """Every non-constant colour vector that the closed braid carries back to itself."""

    if beta.kind != "braid":
        raise KindError("fox_colorings expects a braid word")
    if strands < 1 or beta.max_index() >= strands:
        raise DegreeError(f"Braid {beta} does not fit on {strands} strands")
    found = {
        cv
        for cv in _candidates(strands)
        if not cv.is_constant() and is_closure_coloring(beta, cv)
    }
    if normalize:
        return {cv.normalized() for cv in found}
    return found


def check_coloring(beta: Word, strands: int, cv: ColorVector) -> None:
    """Raise ``ColoringError`` unless ``cv`` is a non-constant closure colouring."""

    if len(cv) != strands:
        raise ColoringError(f"Colour vector has {len(cv)} entries for {strands} strands")
    if cv.is_constant():
        raise ColoringError("A constant colouring does not give a connected 3-fold cover")
    if not is_closure_coloring(beta, cv):
        raise ColoringError(f"{cv} is not carried back to itself by {beta}")


__all__ = [
    "COLORS",
    "ColorVector",
    "apply_braid",
    "check_coloring",
    "color_dynamics",
    "fox_colorings",
    "is_closure_coloring",
    "parse_color_vector",
]
