"""Cell complex of the branched cover described by a chart movie.

The base sphere is cut into cells by the vertical lines through the slices,
the arc pieces between them and the event vertices; the complementary disk
closes it up as the outer face. Each base cell is lifted to ``n`` sheets.
Crossing an arc piece labelled ``i`` swaps sheets ``i`` and ``i + 1``; every
other edge is crossed straight. Lifted vertices are recovered by walking the
face boundaries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable

import networkx as nx

from ..chart.movie import ChartMovie
from ..chart.validate import validate_movie
from ..errors import InvalidMovieError

EdgeKey = tuple[Hashable, ...]
Side = str  # "plain", "above" or "below"
Step = tuple[EdgeKey, bool, Side]


@dataclass(slots=True)
class BaseComplex:
    """Cells of the base sphere: edge labels and oriented face boundaries."""

    labels: dict[EdgeKey, int | None] = field(default_factory=dict)
    faces: dict[Hashable, list[Step]] = field(default_factory=dict)
    outer: Hashable = "outer"


@dataclass(slots=True)
class CellComplex:
    """Lifted closed surface with enough incidence data to check it."""

    degree: int
    vertices: int
    edges: int
    faces: int
    face_boundaries: dict[tuple[Hashable, int], tuple[tuple[EdgeKey, int], ...]]
    components: list[frozenset[int]]

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces

    def is_closed(self) -> bool:
        """Every lifted edge bounds exactly two face sides."""

        sides: Counter[tuple[EdgeKey, int]] = Counter()
        for boundary in self.face_boundaries.values():
            sides.update(boundary)
        if len(sides) != self.edges:
            return False
        return all(count == 2 for count in sides.values())


def _strip_faces(base: BaseComplex, movie: ChartMovie, t: int) -> None:
    """Faces between vertical lines ``t - 1`` and ``t`` (events are 1-based)."""

    pre, post = movie.slices[t - 1], movie.slices[t]
    event = movie.events[t - 1]
    p = event.position
    k_left, k_right = event.arity()

    def upper(j: int) -> EdgeKey:
        return ("Top", t) if j < 0 else ("A", t, j)

    def lower(j: int) -> EdgeKey:
        return ("Bot", t) if j >= len(pre) else ("A", t, j)

    for j in range(len(pre)):
        if j < p or j >= p + k_left:
            base.labels[("A", t, j)] = pre[j].index
    base.labels[("Top", t)] = None
    base.labels[("Bot", t)] = None
    for k in range(k_left):
        base.labels[("L", t, k)] = pre[p + k].index
    for k in range(k_right):
        base.labels[("R", t, k)] = post[p + k].index

    for gap in range(len(pre) + 1):
        if p <= gap <= p + k_left:
            continue
        shifted = gap if gap < p else gap - k_left + k_right
        base.faces[("gap", t, gap)] = [
            (upper(gap - 1), True, "below"),
            (("S", t, shifted), True, "plain"),
            (lower(gap), False, "above"),
            (("S", t - 1, gap), False, "plain"),
        ]

    top_curve, bottom_curve = upper(p - 1), lower(p + k_left)
    if k_left and k_right:
        base.faces[("up", t)] = [
            (top_curve, True, "below"),
            (("S", t, p), True, "plain"),
            (("R", t, 0), False, "above"),
            (("L", t, 0), False, "above"),
            (("S", t - 1, p), False, "plain"),
        ]
        base.faces[("down", t)] = [
            (("L", t, k_left - 1), True, "below"),
            (("R", t, k_right - 1), True, "below"),
            (("S", t, p + k_right), True, "plain"),
            (bottom_curve, False, "above"),
            (("S", t - 1, p + k_left), False, "plain"),
        ]
    elif k_right:
        base.faces[("around", t)] = [
            (top_curve, True, "below"),
            (("S", t, p), True, "plain"),
            (("R", t, 0), False, "above"),
            (("R", t, k_right - 1), True, "below"),
            (("S", t, p + k_right), True, "plain"),
            (bottom_curve, False, "above"),
            (("S", t - 1, p), False, "plain"),
        ]
    else:
        base.faces[("around", t)] = [
            (top_curve, True, "below"),
            (("S", t, p), True, "plain"),
            (bottom_curve, False, "above"),
            (("S", t - 1, p + k_left), False, "plain"),
            (("L", t, k_left - 1), True, "below"),
            (("L", t, 0), False, "above"),
            (("S", t - 1, p), False, "plain"),
        ]
    for k in range(1, k_left):
        base.faces[("left", t, k)] = [
            (("S", t - 1, p + k), True, "plain"),
            (("L", t, k), True, "above"),
            (("L", t, k - 1), False, "below"),
        ]
    for k in range(1, k_right):
        base.faces[("right", t, k)] = [
            (("R", t, k - 1), True, "below"),
            (("S", t, p + k), True, "plain"),
            (("R", t, k), False, "above"),
        ]


def base_complex(movie: ChartMovie) -> BaseComplex:
    """Cells of the base sphere for a valid movie."""

    base = BaseComplex()
    steps = len(movie.events)
    for t, word in enumerate(movie.slices):
        for gap in range(len(word) + 1):
            base.labels[("S", t, gap)] = None
    for t in range(1, steps + 1):
        _strip_faces(base, movie, t)
    if steps == 0:
        # an empty movie still needs one strip for the inner disk
        steps = 1
        base.labels.update({("S", 1, 0): None, ("Top", 1): None, ("Bot", 1): None})
        base.faces[("gap", 1, 0)] = [
            (("Top", 1), True, "below"),
            (("S", 1, 0), True, "plain"),
            (("Bot", 1), False, "above"),
            (("S", 0, 0), False, "plain"),
        ]
    base.faces[base.outer] = (
        [(("Top", t), True, "plain") for t in range(1, steps + 1)]
        + [(("S", steps, 0), True, "plain")]
        + [(("Bot", t), False, "plain") for t in range(steps, 0, -1)]
        + [(("S", 0, 0), False, "plain")]
    )
    return base


def _swap(label: int | None, sheet: int) -> int:
    if label is None:
        return sheet
    if sheet == label:
        return label + 1
    if sheet == label + 1:
        return label
    return sheet


def lift(base: BaseComplex, degree: int, *, branched: bool = True) -> CellComplex:
    """Lift every cell to ``degree`` sheets and count the lifted vertices.

    With ``branched=False`` every edge is crossed straight, giving ``degree``
    copies of the base sphere.
    """

    parent: dict[Hashable, Hashable] = {}

    def find(token: Hashable) -> Hashable:
        parent.setdefault(token, token)
        while parent[token] != token:
            parent[token] = parent[parent[token]]
            token = parent[token]
        return token

    def union(a: Hashable, b: Hashable) -> None:
        parent[find(a)] = find(b)

    graph = nx.Graph()
    boundaries: dict[tuple[Hashable, int], tuple[tuple[EdgeKey, int], ...]] = {}
    for face, steps in base.faces.items():
        for sheet in range(1, degree + 1):
            walk = []
            for edge, forward, side in steps:
                copy = sheet
                if branched and side == "below":
                    copy = _swap(base.labels[edge], sheet)
                start, end = (edge, copy, 0), (edge, copy, 1)
                if not forward:
                    start, end = end, start
                walk.append((edge, copy, start, end))
                graph.add_edge(("face", face, sheet), ("edge", edge, copy))
            for index, (_, _, _, exit_token) in enumerate(walk):
                union(exit_token, walk[(index + 1) % len(walk)][2])
            boundaries[(face, sheet)] = tuple((edge, copy) for edge, copy, _, _ in walk)

    for edge in base.labels:
        for sheet in range(1, degree + 1):
            find((edge, sheet, 0))
            find((edge, sheet, 1))
    vertices = len({find(token) for token in list(parent)})

    components = []
    for component in nx.connected_components(graph):
        sheets = frozenset(
            node[2]
            for node in component
            if node[0] == "face" and node[1] == base.outer
        )
        components.append(sheets)
    components.sort(key=min)
    return CellComplex(
        degree=degree,
        vertices=vertices,
        edges=len(base.labels) * degree,
        faces=len(base.faces) * degree,
        face_boundaries=boundaries,
        components=components,
    )


def build_cell_complex(movie: ChartMovie) -> CellComplex:
    """Closed-surface complex of the cover extended trivially over the outer disk."""

    report = validate_movie(movie)
    if not report.ok:
        raise InvalidMovieError("; ".join(report.lines()))
    return lift(base_complex(movie), movie.degree)


__all__ = ["BaseComplex", "CellComplex", "base_complex", "build_cell_complex", "lift"]
