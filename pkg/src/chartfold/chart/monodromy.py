"""Monodromy of chart movies and the standard charts realising Hurwitz systems."""

from __future__ import annotations

from ..algebra.words import Letter, Word, perm_image
from ..errors import InvalidMovieError
from ..hurwitz.normal_form import normal_form_of
from ..hurwitz.systems import HurwitzSystem, Transposition
from .movie import ChartMovie, MovieBuilder
from .validate import validate_movie


def black_vertex_label(movie: ChartMovie, index: int) -> tuple[Word, Letter]:
    """Prefix word and letter of the black vertex at event ``index`` (1-based)."""

    event = movie.events[index - 1]
    pre, post = movie.slices[index - 1], movie.slices[index]
    source = post if event.sign > 0 else pre
    return source.slice(0, event.position), source[event.position]


def meridian(prefix: Word, letter: Letter, degree: int) -> Transposition:
    """Monodromy of a black vertex whose letter sits below ``prefix``."""

    inverse = perm_image(prefix, degree).inverse()
    return Transposition(inverse(letter.index), inverse(letter.index + 1))


def black_monodromies(movie: ChartMovie) -> list[tuple[int, Transposition]]:
    """``(event index, transposition)`` for each black vertex in time order."""

    result = []
    for index, event in enumerate(movie.events, start=1):
        if event.is_black():
            prefix, letter = black_vertex_label(movie, index)
            result.append((index, meridian(prefix, letter, movie.degree)))
    return result


def extract_hurwitz(movie: ChartMovie) -> HurwitzSystem:
    """Hurwitz system read off the black vertices of a valid movie."""

    report = validate_movie(movie)
    if not report.ok:
        raise InvalidMovieError("; ".join(report.lines()))
    return HurwitzSystem(tuple(entry for _, entry in black_monodromies(movie)), movie.degree)


def _pair_block(builder: MovieBuilder, a: int, b: int) -> None:
    """Two black vertices with monodromy ``(a b)``, nested under type-II pairs."""

    depth = b - 1 - a
    for offset in range(depth):
        builder.birth(offset, Letter(a + offset))
    builder.insert(depth, Letter(b - 1))
    builder.delete(depth)
    for offset in reversed(range(depth)):
        builder.death(offset)


def chart_from_pairs(system: HurwitzSystem, kind: str = "perm") -> ChartMovie:
    """Movie for a system of equal adjacent pairs ``(x, x, y, y, ...)``."""

    entries = system.entries
    if len(entries) % 2 or any(entries[i] != entries[i + 1] for i in range(0, len(entries), 2)):
        raise ValueError(f"System {system} is not made of equal adjacent pairs")
    builder = MovieBuilder(max(system.degree, 2), kind)  # type: ignore[arg-type]
    for i in range(0, len(entries), 2):
        _pair_block(builder, entries[i].a, entries[i].b)
    return builder.build()


def standard_chart(n: int, m: int) -> ChartMovie:
    """Braid-kind chart of the normal-form system for degree ``n`` and length ``m``."""

    return chart_from_pairs(normal_form_of(n, m), kind="braid")


__all__ = [
    "black_monodromies",
    "black_vertex_label",
    "chart_from_pairs",
    "extract_hurwitz",
    "meridian",
    "standard_chart",
]
