"""Chart movies: a chart in general position read as a sequence of slice words.

Every event maps the slice before it to the slice after it. Positions are
0-based internally. The text tokens follow the essay notation: ``b<j>+`` inserts
at slot ``j``, while ``b<j>-``, ``II<j>``, ``x<j>``, ``w<j>`` and ``n<j>`` name
the 1-based letter where the event starts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Literal

from ..algebra.words import Letter, Word, WordKind, parse_word
from ..errors import DegreeError, KindError, ParseError

EventKind = Literal["black", "type2", "crossing", "white", "node"]

_TOKEN_PATTERN = re.compile(
    r"(?P<word>\([^()]*\))"
    r"|--(?P<arrow>(?:b|II|x|w|n)\d+[+-]?)->"
    r"|(?P<event>[^\s()\[\]]+)"
)
_EVENT_PATTERN = re.compile(r"^(?P<name>b|II|x|w|n)(?P<index>\d+)(?P<sign>[+-])?$")


@dataclass(frozen=True, slots=True)
class ChartEvent:
    """One critical event.

    ``sign`` is ``+1`` for a black-vertex insertion or type-II birth and ``-1``
    for a deletion or death. For a node it is the sign of the flipped letter
    after the event, or ``0`` when read from a bare ``n<j>`` token.
    """

    kind: EventKind
    position: int
    sign: int = 0

    def is_black(self) -> bool:
        return self.kind == "black"

    def arity(self) -> tuple[int, int]:
        """Letters consumed from the pre-word and produced in the post-word."""

        if self.kind == "black":
            return (0, 1) if self.sign > 0 else (1, 0)
        if self.kind == "type2":
            return (0, 2) if self.sign > 0 else (2, 0)
        if self.kind == "crossing":
            return (2, 2)
        if self.kind == "white":
            return (3, 3)
        return (1, 1)


@dataclass(frozen=True, slots=True)
class ChartMovie:
    """Slices ``w_0..w_s`` with the events between them."""

    degree: int
    kind: WordKind
    slices: tuple[Word, ...]
    events: tuple[ChartEvent, ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise DegreeError(f"Degree must be positive, got {self.degree}")
        if len(self.slices) != len(self.events) + 1:
            raise ValueError("A movie needs exactly one more slice than events")

    @classmethod
    def empty(cls, degree: int, kind: WordKind = "perm") -> ChartMovie:
        return cls(degree, kind, (Word((), kind),), ())

    def __len__(self) -> int:
        return len(self.events)

    def black_events(self) -> list[int]:
        """0-based indices of the black-vertex events."""

        return [index for index, event in enumerate(self.events) if event.is_black()]

    def count(self, kind: EventKind) -> int:
        return sum(1 for event in self.events if event.kind == kind)

    def __str__(self) -> str:
        return serialize_movie(self)


def slice_word(movie: ChartMovie, t: int) -> Word:
    """The slice word ``w_t``."""

    if not 0 <= t < len(movie.slices):
        raise IndexError(f"Slice index {t} outside 0..{len(movie.slices) - 1}")
    return movie.slices[t]


class MovieBuilder:
    """Accumulates events and computes the slices they produce."""

    def __init__(self, degree: int, kind: WordKind = "braid") -> None:
        self.degree = degree
        self.kind = kind
        self.letters: list[Letter] = []
        self.slices: list[Word] = [Word((), kind)]
        self.events: list[ChartEvent] = []

    def _push(self, event: ChartEvent) -> MovieBuilder:
        self.events.append(event)
        self.slices.append(Word(tuple(self.letters), self.kind))
        return self

    def insert(self, slot: int, letter: Letter) -> MovieBuilder:
        self.letters.insert(slot, letter)
        return self._push(ChartEvent("black", slot, 1))

    def delete(self, position: int) -> MovieBuilder:
        del self.letters[position]
        return self._push(ChartEvent("black", position, -1))

    def birth(self, position: int, letter: Letter) -> MovieBuilder:
        partner = letter if self.kind == "perm" else letter.inverse()
        self.letters[position:position] = [letter, partner]
        return self._push(ChartEvent("type2", position, 1))

    def death(self, position: int) -> MovieBuilder:
        del self.letters[position : position + 2]
        return self._push(ChartEvent("type2", position, -1))

    def crossing(self, position: int) -> MovieBuilder:
        first, second = self.letters[position], self.letters[position + 1]
        self.letters[position], self.letters[position + 1] = second, first
        return self._push(ChartEvent("crossing", position))

    def white(self, position: int, segment: Iterable[Letter]) -> MovieBuilder:
        self.letters[position : position + 3] = list(segment)
        return self._push(ChartEvent("white", position))

    def node(self, position: int) -> MovieBuilder:
        flipped = self.letters[position].inverse()
        self.letters[position] = flipped
        return self._push(ChartEvent("node", position, flipped.sign))

    def extend(self, events: Iterable[ChartEvent], slices: Iterable[Word]) -> MovieBuilder:
        """Append already-computed events with their post-slices."""

        for event, post in zip(events, slices):
            self.letters = list(post.letters)
            self.events.append(event)
            self.slices.append(Word(tuple(post.letters), self.kind))
        return self

    def build(self) -> ChartMovie:
        return ChartMovie(self.degree, self.kind, tuple(self.slices), tuple(self.events))


def concat_movies(movies: Iterable[ChartMovie]) -> ChartMovie:
    """Run movies one after another; each must start and end empty."""

    items = list(movies)
    if not items:
        raise ValueError("Nothing to concatenate")
    degree, kind = items[0].degree, items[0].kind
    slices: list[Word] = [Word((), kind)]
    events: list[ChartEvent] = []
    for movie in items:
        if movie.kind != kind:
            raise KindError("Cannot concatenate movies of different kinds")
        degree = max(degree, movie.degree)
        events.extend(movie.events)
        slices.extend(movie.slices[1:])
    return ChartMovie(degree, kind, tuple(slices), tuple(events))


def forget_signs(movie: ChartMovie) -> ChartMovie:
    """Project a braid movie to a perm movie; node events vanish."""

    slices = [movie.slices[0].forget_signs()]
    events: list[ChartEvent] = []
    for event, post in zip(movie.events, movie.slices[1:]):
        if event.kind == "node":
            continue
        events.append(event)
        slices.append(post.forget_signs())
    return ChartMovie(movie.degree, "perm", tuple(slices), tuple(events))


def format_event(event: ChartEvent) -> str:
    if event.kind == "black":
        if event.sign > 0:
            return f"b{event.position}+"
        return f"b{event.position + 1}-"
    if event.kind == "type2":
        return f"II{event.position + 1}" + ("+" if event.sign > 0 else "-")
    if event.kind == "crossing":
        return f"x{event.position + 1}"
    if event.kind == "white":
        return f"w{event.position + 1}"
    suffix = {1: "+", -1: "-"}.get(event.sign, "")
    return f"n{event.position + 1}{suffix}"


def parse_event(token: str, *, line: int = 1, column: int = 1) -> ChartEvent:
    match = _EVENT_PATTERN.match(token)
    if not match:
        raise ParseError(f"Unknown event token {token!r}", line=line, column=column)
    name, index, sign = match["name"], int(match["index"]), match["sign"]
    if name == "b":
        if sign is None:
            raise ParseError(f"Black vertex token needs + or -: {token!r}", line=line, column=column)
        if sign == "+":
            return ChartEvent("black", index, 1)
        return ChartEvent("black", _one_based(index, token, line, column), -1)
    position = _one_based(index, token, line, column)
    if name == "II":
        if sign is None:
            raise ParseError(f"Type II token needs + or -: {token!r}", line=line, column=column)
        return ChartEvent("type2", position, 1 if sign == "+" else -1)
    if name in ("x", "w"):
        if sign is not None:
            raise ParseError(f"Unexpected sign on {token!r}", line=line, column=column)
        return ChartEvent("crossing" if name == "x" else "white", position)
    return ChartEvent("node", position, {"+": 1, "-": -1}.get(sign or "", 0))


def _one_based(index: int, token: str, line: int, column: int) -> int:
    if index < 1:
        raise ParseError(f"Positions in {token!r} are 1-based", line=line, column=column)
    return index - 1


def serialize_movie(movie: ChartMovie) -> str:
    """Canonical one-line body ``[w0 e1 w1 ... ws]``."""

    parts = [str(movie.slices[0])]
    for event, post in zip(movie.events, movie.slices[1:]):
        parts.append(format_event(event))
        parts.append(str(post))
    return "[" + " ".join(parts) + "]"


def parse_movie_body(
    text: str, degree: int, kind: WordKind, *, line: int = 1, column: int = 1
) -> ChartMovie:
    """Parse ``[w0 e1 w1 ...]``; the arrow form ``w --e-> w`` is accepted too."""

    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError("Movie body must be enclosed in [ ]", line=line, column=column)
    offset = column + text.index("[") + 1
    slices: list[Word] = []
    events: list[ChartEvent] = []
    expect_word = True
    for match in _TOKEN_PATTERN.finditer(stripped[1:-1]):
        position = offset + match.start()
        if match["word"] is not None:
            if not expect_word:
                raise ParseError("Two words without an event between them", line=line, column=position)
            word = parse_word(match["word"], kind=kind, line=line, column=position)
            if word.max_index() >= degree:
                raise ParseError(f"Letter index too large for degree {degree}", line=line, column=position)
            slices.append(word)
        else:
            if expect_word:
                raise ParseError("An event must sit between two words", line=line, column=position)
            token = match["arrow"] or match["event"]
            events.append(parse_event(token, line=line, column=position))
        expect_word = not expect_word
    if expect_word or not slices:
        raise ParseError("Movie body must start and end with a word", line=line, column=column)
    return ChartMovie(degree, kind, tuple(slices), tuple(events))


def parse_header(lines: Iterable[tuple[int, str]]) -> tuple[dict[str, str], list[tuple[int, str]]]:
    """Split ``key: value`` header lines from the rest; ``#`` lines are skipped."""

    header: dict[str, str] = {}
    body: list[tuple[int, str]] = []
    for number, raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not body and re.match(r"^[a-z-]+\s*:", line):
            key, value = line.split(":", 1)
            header[key.strip().lower()] = value.strip()
        else:
            body.append((number, raw))
    return header, body


def header_degree_kind(header: dict[str, str]) -> tuple[int, WordKind]:
    try:
        degree = int(header["degree"])
    except (KeyError, ValueError) as exc:
        raise ParseError("Missing or bad 'degree:' header") from exc
    kind = header.get("kind", "perm")
    if kind not in ("perm", "braid"):
        raise ParseError(f"Unknown movie kind {kind!r}")
    return degree, kind  # type: ignore[return-value]


def parse_movie(text: str) -> ChartMovie:
    """Parse a movie file: ``degree:`` and ``kind:`` headers, then the body."""

    header, body = parse_header(enumerate(text.splitlines(), start=1))
    degree, kind = header_degree_kind(header)
    if not body:
        raise ParseError("Movie file has no body")
    first_line = body[0][0]
    joined = " ".join(raw.strip() for _, raw in body)
    return parse_movie_body(joined, degree, kind, line=first_line)


def format_movie_file(movie: ChartMovie) -> str:
    return f"degree: {movie.degree}\nkind: {movie.kind}\n{serialize_movie(movie)}\n"


__all__ = [
    "ChartEvent",
    "ChartMovie",
    "EventKind",
    "MovieBuilder",
    "concat_movies",
    "forget_signs",
    "format_event",
    "format_movie_file",
    "header_degree_kind",
    "parse_event",
    "parse_header",
    "parse_movie",
    "parse_movie_body",
    "serialize_movie",
    "slice_word",
]
