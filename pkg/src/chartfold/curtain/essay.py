"""Essays: sequences of chart movies joined by curtain moves.

An essay file carries ``degree:`` and ``kind:`` headers, an optional ``window:``
header, then alternating ``CHART [movie]`` and ``MOVE <name>@<site>`` lines.
The site is the 1-based index of the first event of the source chart that the
move touches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..algebra.words import WordKind
from ..chart.monodromy import extract_hurwitz
from ..chart.movie import (
    ChartMovie,
    header_degree_kind,
    parse_header,
    parse_movie_body,
    serialize_movie,
)
from ..errors import ParseError
from ..hurwitz.systems import HurwitzSystem

MOVE_NAMES = ("1H", "2H", "IIb", "IIs", "CC", "X", "Z", "Xi+", "Xi-", "CIII", "CI")
_MOVE_PATTERN = re.compile(r"^MOVE\s+(?P<name>\S+?)@(?P<site>\d+)\s*$")
_CHART_PATTERN = re.compile(r"^CHART\s+(?P<body>\[.*\])\s*$")


@dataclass(frozen=True, slots=True)
class CurtainMove:
    name: str
    site: int

    def __post_init__(self) -> None:
        if self.name not in MOVE_NAMES:
            raise ValueError(f"Unknown curtain move {self.name!r}")
        if self.site < 1:
            raise ValueError("Move sites are 1-based")

    def __str__(self) -> str:
        return f"{self.name}@{self.site}"


@dataclass(frozen=True, slots=True)
class Essay:
    """Charts ``G_0..G_r`` with ``moves[i]`` taking ``charts[i]`` to ``charts[i + 1]``."""

    degree: int
    kind: WordKind
    charts: tuple[ChartMovie, ...]
    moves: tuple[CurtainMove, ...]
    window: int | None = None

    def __post_init__(self) -> None:
        if len(self.charts) != len(self.moves) + 1:
            raise ValueError("An essay needs exactly one more chart than moves")

    def steps(self) -> Iterable[tuple[ChartMovie, CurtainMove, ChartMovie]]:
        for index, move in enumerate(self.moves):
            yield self.charts[index], move, self.charts[index + 1]


@dataclass(slots=True)
class EssayWriter:
    """Appends charts to an essay, deriving each move site from the charts."""

    degree: int
    kind: WordKind
    charts: list[ChartMovie]
    moves: list[CurtainMove]

    @classmethod
    def starting_empty(cls, degree: int, kind: WordKind = "braid") -> EssayWriter:
        return cls(degree, kind, [ChartMovie.empty(degree, kind)], [])

    @property
    def current(self) -> ChartMovie:
        return self.charts[-1]

    def apply(self, name: str, chart: ChartMovie) -> EssayWriter:
        self.moves.append(CurtainMove(name, first_difference(self.current, chart)))
        self.charts.append(chart)
        return self

    def build(self, window: int | None = None) -> Essay:
        return Essay(self.degree, self.kind, tuple(self.charts), tuple(self.moves), window)


def first_difference(source: ChartMovie, target: ChartMovie) -> int:
    """1-based index of the first event where the two charts part ways."""

    index = 0
    limit = min(len(source.events), len(target.events))
    while (
        index < limit
        and source.events[index] == target.events[index]
        and source.slices[index + 1] == target.slices[index + 1]
    ):
        index += 1
    return index + 1


def parse_essay(text: str) -> Essay:
    header, body = parse_header(enumerate(text.splitlines(), start=1))
    degree, kind = header_degree_kind(header)
    window = None
    if "window" in header:
        try:
            window = int(header["window"])
        except ValueError as exc:
            raise ParseError(f"Bad window header {header['window']!r}") from exc

    charts: list[ChartMovie] = []
    moves: list[CurtainMove] = []
    for number, raw in body:
        line = raw.strip()
        column = raw.index(line[0]) + 1
        if line.startswith("CHART"):
            if len(charts) != len(moves):
                raise ParseError("Two charts without a move between them", line=number, column=column)
            match = _CHART_PATTERN.match(line)
            if not match:
                raise ParseError("CHART needs a [movie] body", line=number, column=column)
            body_column = column + match.start("body")
            charts.append(parse_movie_body(match["body"], degree, kind, line=number, column=body_column))
        elif line.startswith("MOVE"):
            if len(charts) != len(moves) + 1:
                raise ParseError("A move must follow a chart", line=number, column=column)
            match = _MOVE_PATTERN.match(line)
            if not match or match["name"] not in MOVE_NAMES:
                raise ParseError(f"Bad move line {line!r}", line=number, column=column)
            moves.append(CurtainMove(match["name"], int(match["site"])))
        elif line.startswith("["):
            # a bare movie is shorthand for a one-chart essay
            if charts or moves:
                raise ParseError("Bare movies are only allowed alone", line=number, column=column)
            charts.append(parse_movie_body(line, degree, kind, line=number, column=column))
        else:
            raise ParseError(f"Expected CHART or MOVE, got {line!r}", line=number, column=column)
    if not charts or len(charts) != len(moves) + 1:
        raise ParseError("An essay must start and end with a chart")
    return Essay(degree, kind, tuple(charts), tuple(moves), window)


def serialize_essay(essay: Essay) -> str:
    lines = [f"degree: {essay.degree}", f"kind: {essay.kind}"]
    if essay.window is not None:
        lines.append(f"window: {essay.window}")
    lines.append(f"CHART {serialize_movie(essay.charts[0])}")
    for move, chart in zip(essay.moves, essay.charts[1:]):
        lines.append(f"MOVE {move}")
        lines.append(f"CHART {serialize_movie(chart)}")
    return "\n".join(lines) + "\n"


def essay_hurwitz_systems(essay: Essay) -> list[HurwitzSystem]:
    """Extracted Hurwitz system of every chart, in order."""

    return [extract_hurwitz(chart) for chart in essay.charts]


__all__ = [
    "MOVE_NAMES",
    "CurtainMove",
    "Essay",
    "EssayWriter",
    "essay_hurwitz_systems",
    "first_difference",
    "parse_essay",
    "serialize_essay",
]
