"""Static SVG diagrams of chart movies and essays.

Time runs left to right and slice positions top to bottom. A piece of an arc
is green when its meridian is the transposition (1 3), otherwise blue for
label 1 and red for label 2; higher labels are green as well. Black vertices
are discs, white vertices rings and nodes solid squares. An essay is drawn
as one panel per chart, stacked, each captioned with the move that produced it.
"""

from __future__ import annotations

from pathlib import Path

import svgwrite

from .chart.monodromy import meridian
from .chart.movie import ChartMovie
from .chart.orientation import event_links
from .chart.validate import validate_movie
from .config.settings import RenderSettings
from .curtain.essay import Essay
from .curtain.validate import validate_essay
from .errors import InvalidMovieError
from .hurwitz.systems import Transposition

_CAPTION = 14
_CONJUGATED = Transposition(1, 3)


def _round(value: float) -> float:
    return round(value, 2)


class _Panel:
    def __init__(self, movie: ChartMovie, top: float, settings: RenderSettings) -> None:
        self.movie = movie
        self.settings = settings
        inner_width = settings.panel_width - 2 * settings.margin
        inner_height = settings.panel_height - 2 * settings.margin - _CAPTION
        rows = max([1, *(len(word) for word in movie.slices)])
        self.dx = inner_width / max(1, len(movie.slices) - 1)
        self.dy = inner_height / rows
        self.left = settings.margin
        self.top = top + settings.margin + _CAPTION

    def x(self, t: float) -> float:
        return _round(self.left + t * self.dx)

    def y(self, j: float) -> float:
        return _round(self.top + (j + 0.5) * self.dy)

    def color(self, t: int, j: int) -> str:
        word = self.movie.slices[t]
        letter = word[j]
        colors = self.settings.colors
        if letter.index > 2 or meridian(word.slice(0, j), letter, self.movie.degree) == _CONJUGATED:
            return colors["conjugated"]
        return colors["label_1"] if letter.index == 1 else colors["label_2"]

    def draw(self, drawing: svgwrite.Drawing) -> None:
        colors = self.settings.colors
        for t, event in enumerate(self.movie.events, start=1):
            for (t0, j0), (t1, j1), parity in event_links(t, event, len(self.movie.slices[t - 1])):
                stroke = self.color(t0, j0)
                if t0 == t1:
                    # type-II cap opening towards the pair
                    bend = self.x(t0 - 0.5) if t0 == t else self.x(t0 + 0.5)
                    points = [
                        (self.x(t0), self.y(j0)),
                        (bend, _round((self.y(j0) + self.y(j1)) / 2)),
                        (self.x(t1), self.y(j1)),
                    ]
                    drawing.add(drawing.polyline(points, stroke=stroke, fill="none", stroke_width=2))
                    continue
                start, end = (self.x(t0), self.y(j0)), (self.x(t1), self.y(j1))
                drawing.add(drawing.line(start, end, stroke=stroke, stroke_width=2))
                if parity:
                    middle = (_round((start[0] + end[0]) / 2) - 3, _round((start[1] + end[1]) / 2) - 3)
                    drawing.add(drawing.rect(insert=middle, size=(6, 6), fill=colors["node"]))
            centre = (self.x(t - 0.5), self.y(event.position))
            if event.kind == "black":
                piece = (t, event.position) if event.sign > 0 else (t - 1, event.position)
                end = (self.x(piece[0]), self.y(piece[1]))
                drawing.add(drawing.line(centre, end, stroke=self.color(*piece), stroke_width=2))
                drawing.add(drawing.circle(centre, r=3.5, fill=colors["vertex"]))
            elif event.kind == "white":
                ring = (self.x(t - 0.5), self.y(event.position + 1))
                drawing.add(drawing.circle(ring, r=4, fill="white", stroke=colors["vertex"]))


def _panels(obj: ChartMovie | Essay) -> list[tuple[str, ChartMovie]]:
    if isinstance(obj, ChartMovie):
        report = validate_movie(obj)
        if not report.ok:
            raise InvalidMovieError("; ".join(report.lines()))
        return [(f"degree {obj.degree} {obj.kind} movie", obj)]
    report = validate_essay(obj)
    if not report.ok:
        raise InvalidMovieError("; ".join(report.lines()))
    captions = ["G0"] + [f"G{index} after {move}" for index, move in enumerate(obj.moves, start=1)]
    return list(zip(captions, obj.charts))


def render_svg(obj: ChartMovie | Essay, settings: RenderSettings | None = None) -> str:
    """SVG text for a valid movie or essay; equal inputs give equal bytes."""

    settings = settings or RenderSettings()
    panels = _panels(obj)
    width, height = settings.panel_width, settings.panel_height
    drawing = svgwrite.Drawing(size=(width, height * len(panels)), debug=False)
    for number, (caption, movie) in enumerate(panels):
        top = number * height
        drawing.add(
            drawing.rect(
                insert=(2, top + 2), size=(width - 4, height - 4), fill="none", stroke="#999999"
            )
        )
        drawing.add(drawing.text(caption, insert=(settings.margin, top + settings.margin), font_size=11))
        _Panel(movie, top, settings).draw(drawing)
    return drawing.tostring()


def write_svg(obj: ChartMovie | Essay, path: Path, settings: RenderSettings | None = None) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_svg(obj, settings), encoding="utf-8")
    return path


__all__ = ["render_svg", "write_svg"]
