"""Validation of chart movies against the critical-event templates."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..algebra.artin import braid_equal
from ..algebra.words import Letter, Word
from .movie import ChartEvent, ChartMovie


@dataclass(slots=True)
class ValidationReport:
    """Outcome of a validation pass; ``ok`` exactly when no diagnostics were recorded."""

    diagnostics: list[tuple[int, str]] = field(default_factory=list)
    unit: str = "event"

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def add(self, index: int, message: str) -> None:
        self.diagnostics.append((index, message))

    def extend(self, other: ValidationReport, *, offset: int = 0, prefix: str = "") -> None:
        for index, message in other.diagnostics:
            self.diagnostics.append((index + offset, prefix + message))

    def lines(self) -> list[str]:
        return [f"{self.unit} {index}: {message}" for index, message in self.diagnostics]


@lru_cache(maxsize=None)
def _white_segments_equal(left: tuple[int, ...], right: tuple[int, ...]) -> bool:
    """Braid equality of two signed length-3 segments normalised to indices 1, 2."""

    def as_word(signed: tuple[int, ...]) -> Word:
        return Word(tuple(Letter(abs(value), 1 if value > 0 else -1) for value in signed), "braid")

    return braid_equal(as_word(left), as_word(right), 3)


def _normalised(segment: tuple[Letter, ...], base: int) -> tuple[int, ...]:
    return tuple((letter.index - base + 1) * letter.sign for letter in segment)


def check_event(pre: Word, post: Word, event: ChartEvent, kind: str) -> str | None:
    """Return a message when ``event`` does not map ``pre`` to ``post``."""

    a, b = pre.letters, post.letters
    p = event.position
    k_left, k_right = event.arity()
    if p < 0 or p + k_left > len(a) or p + k_right > len(b):
        return f"position {p} out of range"
    if a[:p] != b[:p] or a[p + k_left :] != b[p + k_right :]:
        return "letters outside the event changed"
    removed, added = a[p : p + k_left], b[p : p + k_right]

    if event.kind == "black":
        return None
    if event.kind == "type2":
        pair = added if event.sign > 0 else removed
        first, second = pair
        expected = first if kind == "perm" else first.inverse()
        if second != expected:
            return "type II pair is not cancelling"
        return None
    if event.kind == "crossing":
        if abs(removed[0].index - removed[1].index) < 2:
            return "crossing letters must be at least two apart"
        if added != (removed[1], removed[0]):
            return "crossing must swap the two letters"
        return None
    if event.kind == "white":
        left = [letter.index for letter in removed]
        right = [letter.index for letter in added]
        i = min(left)
        if left not in ([i, i + 1, i], [i + 1, i, i + 1]):
            return "white vertex needs an alternating segment i, i+1, i"
        if right != [left[1], left[0], left[1]]:
            return "white vertex must exchange i, i+1, i with i+1, i, i+1"
        if kind == "braid" and not _white_segments_equal(
            _normalised(removed, i), _normalised(added, i)
        ):
            return "white vertex segments are not equal braids"
        return None
    # node
    if kind == "perm":
        return "nodes are not allowed in permutation charts"
    if removed[0].index != added[0].index or removed[0].sign == added[0].sign:
        return "node must flip the sign of one letter"
    if event.sign and added[0].sign != event.sign:
        return "node sign does not match the slice"
    return None


def validate_movie(movie: ChartMovie) -> ValidationReport:
    """Check every event template, empty ends and vertex parities."""

    report = ValidationReport()
    if movie.slices[0].letters:
        report.add(0, "first slice must be empty")
    if movie.slices[-1].letters:
        report.add(len(movie.events), "last slice must be empty")
    for index, word in enumerate(movie.slices):
        if word.letters and word.kind != movie.kind:
            report.add(index, f"slice kind {word.kind} differs from movie kind {movie.kind}")
        if word.max_index() >= movie.degree:
            report.add(index, f"slice letter index does not fit degree {movie.degree}")
    for index, event in enumerate(movie.events, start=1):
        message = check_event(movie.slices[index - 1], movie.slices[index], event, movie.kind)
        if message:
            report.add(index, message)
    if movie.count("black") % 2:
        report.add(len(movie.events), "odd number of black vertices")
    if movie.count("node") % 2:
        report.add(len(movie.events), "odd number of nodes")
    return report


__all__ = ["ValidationReport", "check_event", "validate_movie"]
