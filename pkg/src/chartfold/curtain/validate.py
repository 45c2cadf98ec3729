"""Template matching for curtain moves and whole-essay validation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from ..algebra.permutations import Permutation
from ..chart.monodromy import black_monodromies
from ..chart.movie import ChartMovie
from ..chart.validate import ValidationReport, validate_movie
from ..config.settings import EssaySettings
from ..errors import InvalidMovieError
from .essay import CurtainMove, Essay

ONE_SIDED = ("1H", "2H", "IIb", "Z", "IIs", "Xi+", "Xi-")


@dataclass(frozen=True, slots=True)
class HandleCounts:
    one_handles: int
    two_handles: int

    def balanced(self) -> bool:
        return self.one_handles == self.two_handles


def move_window(
    source: ChartMovie, target: ChartMovie, site: int
) -> tuple[ChartMovie, ChartMovie] | str:
    """The differing sub-movies of two charts, cut at ``site``, or a diagnostic."""

    start = site - 1
    if start > len(source.events) or start > len(target.events):
        return f"site {site} lies beyond the chart"
    if (
        source.events[:start] != target.events[:start]
        or source.slices[: start + 1] != target.slices[: start + 1]
    ):
        return f"charts already differ before site {site}"
    if source.slices[-1] != target.slices[-1]:
        return "charts end in different slices"
    shared = 0
    room = min(len(source.events), len(target.events)) - start
    while (
        shared < room
        and source.events[-shared - 1] == target.events[-shared - 1]
        and source.slices[-shared - 2] == target.slices[-shared - 2]
    ):
        shared += 1
    return _cut(source, start, shared), _cut(target, start, shared)


def _cut(movie: ChartMovie, start: int, shared: int) -> ChartMovie:
    stop = len(movie.events) - shared
    return ChartMovie(
        movie.degree,
        movie.kind,
        movie.slices[start : stop + 1],
        movie.events[start:stop],
    )


def window_monodromy(window: ChartMovie) -> Permutation:
    """Product of the black-vertex transpositions of a sub-movie, in time order."""

    result = Permutation.identity(window.degree)
    for _, entry in black_monodromies(window):
        result = result.then(entry.as_permutation(window.degree))
    return result


def _kinds(window: ChartMovie) -> Counter[str]:
    return Counter(event.kind for event in window.events)


def _pair(window: ChartMovie, *expected: tuple[str, int | None]) -> bool:
    """Exactly two events matching ``(kind, sign)``; a sign of ``None`` matches any."""

    if len(window.events) != 2:
        return False
    return all(
        event.kind == kind and (sign is None or event.sign == sign)
        for event, (kind, sign) in zip(window.events, expected)
    )


def _one_sided(removed: ChartMovie, added: ChartMovie) -> tuple[ChartMovie, bool] | None:
    """The non-empty side of a move that only inserts or only deletes."""

    if removed.events and added.events:
        return None
    if added.events:
        return added, True
    return removed, False


def _shifted_windows(source: ChartMovie, target: ChartMovie, site: int) -> Iterator[ChartMovie]:
    """Earlier placements of a one-sided window that yield the same pair of charts.

    Deleting the first two events of ``birth death birth`` leaves the same chart
    as deleting the last two, while the cut at the first difference sees only
    the latter.
    """

    if len(target.events) > len(source.events):
        longer, shorter = target, source
    else:
        longer, shorter = source, target
    extra = len(longer.events) - len(shorter.events)
    for start in range(min(site - 1, len(shorter.events)) - 1, -1, -1):
        if (
            longer.slices[start + extra] != shorter.slices[start]
            or longer.events[start + extra :] != shorter.events[start:]
            or longer.slices[start + extra + 1 :] != shorter.slices[start + 1 :]
        ):
            return
        yield _cut(longer, start, len(longer.events) - start - extra)


def _one_sided_message(name: str, window: ChartMovie, inserted: bool) -> str | None:
    if name in ("1H", "Xi+") and not inserted:
        return f"{name} must insert events"
    if name in ("2H", "Xi-") and inserted:
        return f"{name} must delete events"
    events = window.events
    if name in ("1H", "2H"):
        if not _pair(window, ("black", None), ("black", None)):
            return f"{name} needs an adjacent pair of black vertices"
        return None
    if name in ("Xi+", "Xi-"):
        paired = _pair(window, ("node", None), ("node", None))
        if not paired or events[0].position != events[1].position:
            return f"{name} needs an adjacent node pair on one letter"
        return None
    if name == "IIs":
        if not _pair(window, ("type2", -1), ("type2", 1)):
            return "IIs needs a type II death followed by a birth"
        return None
    if not _pair(window, ("type2", 1), ("type2", -1)):
        return f"{name} needs a type II birth followed by a death"
    offset = abs(events[0].position - events[1].position)
    if name == "IIb" and offset != 0:
        return "IIb must remove the pair it created"
    if name == "Z" and offset != 1:
        return "Z must cancel one new letter against its neighbour"
    return None


def check_move(
    move: CurtainMove,
    source: ChartMovie,
    target: ChartMovie,
    settings: EssaySettings,
    ci_window: int,
) -> str | None:
    """Return a message when ``move`` does not turn ``source`` into ``target``."""

    cut = move_window(source, target, move.site)
    if isinstance(cut, str):
        return cut
    removed, added = cut
    if not removed.events and not added.events:
        return "move leaves the chart unchanged"
    name = move.name

    if name in ONE_SIDED:
        side = _one_sided(removed, added)
        if side is None:
            return f"{name} must only insert or only delete events"
        window, inserted = side
        message = _one_sided_message(name, window, inserted)
        if message is None:
            return None
        for shifted in _shifted_windows(source, target, move.site):
            if _one_sided_message(name, shifted, inserted) is None:
                return None
        return message

    left, right = _kinds(removed), _kinds(added)
    if name == "CC":
        if len(removed.events) > 3 or len(added.events) > 3:
            return "CC window is too long"
        if left["crossing"] or right["crossing"] or left["white"] or right["white"]:
            return "CC may not involve crossings or white vertices"
        if left["black"] != right["black"] or not left["black"]:
            return "CC must keep its black vertex"
        if left["node"] != right["node"]:
            return "CC must keep the node count"
        if abs(left["type2"] - right["type2"]) != 1:
            return "CC trades exactly one type II event"
        return None
    if name == "X":
        if len(removed.events) > 3 or len(added.events) > 3:
            return "X window is too long"
        if set(left) - {"black", "node"} or set(right) - {"black", "node"}:
            return "X only exchanges black vertices and nodes"
        if left["black"] != right["black"] or not left["black"]:
            return "X must keep the number of black vertices"
        return None
    if name == "CIII":
        limit = settings.ciii_window
        if len(removed.events) > limit or len(added.events) > limit:
            return f"CIII window exceeds {limit} events"
        if left["black"] != 1 or right["black"] != 1:
            return "CIII moves exactly one black vertex"
        if window_monodromy(removed) != window_monodromy(added):
            return "CIII changes the black vertex monodromy"
        return None
    # CI
    if len(removed.events) > ci_window or len(added.events) > ci_window:
        return f"CI window exceeds {ci_window} events"
    if left["black"] != right["black"]:
        return "CI must keep the number of black vertices"
    if window_monodromy(removed) != window_monodromy(added):
        return "CI changes the monodromy of the replaced sub-movie"
    return None


def validate_essay(essay: Essay, settings: EssaySettings | None = None) -> ValidationReport:
    """Check every chart and every move; diagnostics are indexed by move number."""

    settings = settings or EssaySettings()
    ci_window = essay.window or settings.ci_window
    report = ValidationReport(unit="move")
    if essay.charts[0].events:
        report.add(0, "first chart must be empty")
    if essay.charts[-1].events:
        report.add(len(essay.moves), "last chart must be empty")
    for index, chart in enumerate(essay.charts):
        if chart.degree != essay.degree or chart.kind != essay.kind:
            report.add(index, f"chart {index} does not match the essay header")
            continue
        chart_report = validate_movie(chart)
        for event, message in chart_report.diagnostics:
            report.add(index, f"chart {index}, event {event}: {message}")
    for index, (source, move, target) in enumerate(essay.steps(), start=1):
        message = check_move(move, source, target, settings, ci_window)
        if message:
            report.add(index, f"{move}: {message}")
    return report


def handle_counts(essay: Essay, settings: EssaySettings | None = None) -> HandleCounts:
    """Counts of 1-handle and 2-handle moves of a valid essay."""

    report = validate_essay(essay, settings)
    if not report.ok:
        raise InvalidMovieError("; ".join(report.lines()))
    names = Counter(move.name for move in essay.moves)
    return HandleCounts(names["1H"], names["2H"])


__all__ = [
    "HandleCounts",
    "check_move",
    "handle_counts",
    "move_window",
    "validate_essay",
    "window_monodromy",
]
