"""Orientation and semi-orientation of permutation charts.

A letter of a slice is a piece of some arc. Events glue pieces of consecutive
slices into strands; a type-II pair joins its two pieces with opposite sign.
Orienting a chart means choosing a sign per strand such that every white
vertex reads as an equality of braids, which rules out the alternating sign
patterns ``+ - +`` and ``- + -`` on its incoming side.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from ..algebra.words import Letter, Word
from ..errors import InvalidMovieError, KindError
from .movie import ChartEvent, ChartMovie
from .validate import validate_movie

logger = logging.getLogger(__name__)

Piece = tuple[int, int]
Literal_ = tuple[int, int]  # (strand variable, parity)
Clause = tuple[Literal_, Literal_, Literal_]


@dataclass(slots=True)
class StrandGraph:
    """Strand of every piece and its parity relative to the strand root."""

    strand: dict[Piece, int] = field(default_factory=dict)
    parity: dict[Piece, int] = field(default_factory=dict)
    count: int = 0


@dataclass(slots=True)
class Obstruction:
    """Witness that no orientation exists: a core of white vertices that cannot all hold."""

    white_events: tuple[int, ...]
    strands: tuple[int, ...]

    def describe(self) -> str:
        events = ", ".join(str(index) for index in self.white_events)
        return f"white vertices at events {events} admit no common orientation"


def strand_graph(movie: ChartMovie) -> StrandGraph:
    """Glue pieces across events and split them into strands."""

    graph = nx.Graph()
    for t, word in enumerate(movie.slices):
        graph.add_nodes_from((t, j) for j in range(len(word)))
    for t, event in enumerate(movie.events, start=1):
        for left, right, parity in event_links(t, event, len(movie.slices[t - 1])):
            graph.add_edge(left, right, parity=parity)

    result = StrandGraph()
    for number, component in enumerate(nx.connected_components(graph)):
        root = min(component)
        result.parity[root] = 0
        for parent, child in nx.bfs_edges(graph, root):
            result.parity[child] = result.parity[parent] ^ graph.edges[parent, child]["parity"]
        for piece in component:
            result.strand[piece] = number
        result.count = number + 1
    return result


def event_links(t: int, event: ChartEvent, pre_length: int) -> Iterable[tuple[Piece, Piece, int]]:
    """Pieces glued by event ``t``, with parity 1 where the sign flips."""

    p = event.position
    k_left, k_right = event.arity()
    for j in range(pre_length):
        if j < p:
            yield (t - 1, j), (t, j), 0
        elif j >= p + k_left:
            yield (t - 1, j), (t, j - k_left + k_right), 0
    if event.kind == "crossing":
        yield (t - 1, p), (t, p + 1), 0
        yield (t - 1, p + 1), (t, p), 0
    elif event.kind == "white":
        yield (t - 1, p), (t, p + 2), 0
        yield (t - 1, p + 1), (t, p + 1), 0
        yield (t - 1, p + 2), (t, p), 0
    elif event.kind == "node":
        yield (t - 1, p), (t, p), 1
    elif event.kind == "type2":
        if event.sign > 0:
            yield (t, p), (t, p + 1), 1
        else:
            yield (t - 1, p), (t - 1, p + 1), 1


def white_clauses(movie: ChartMovie, strands: StrandGraph) -> list[tuple[int, Clause]]:
    """One clause per white vertex over the signs of its incoming pieces."""

    clauses = []
    for t, event in enumerate(movie.events, start=1):
        if event.kind != "white":
            continue
        pieces = [(t - 1, event.position + offset) for offset in range(3)]
        clause = tuple((strands.strand[piece], strands.parity[piece]) for piece in pieces)
        clauses.append((t, clause))  # type: ignore[arg-type]
    return clauses


def _literal(assignment: dict[int, int], literal: Literal_) -> int | None:
    variable, parity = literal
    if variable not in assignment:
        return None
    return -assignment[variable] if parity else assignment[variable]


def clause_violated(assignment: dict[int, int], clause: Clause) -> bool | None:
    """``None`` while a variable is unassigned; otherwise whether the signs alternate."""

    a, b, c = (_literal(assignment, literal) for literal in clause)
    if a is None or b is None or c is None:
        return None
    return a == c and b != a


def solve_signs(clauses: Sequence[Clause]) -> tuple[dict[int, int], int]:
    """Branch and bound for the assignment violating the fewest clauses."""

    variables = sorted({variable for clause in clauses for variable, _ in clause})
    watching: dict[int, list[Clause]] = {variable: [] for variable in variables}
    for clause in clauses:
        last = max(variable for variable, _ in clause)
        watching[last].append(clause)

    best: dict[str, object] = {"cost": len(clauses) + 1, "assignment": {}}
    assignment: dict[int, int] = {}

    def search(depth: int, cost: int) -> None:
        if cost >= best["cost"]:
            return
        if depth == len(variables):
            best["cost"], best["assignment"] = cost, dict(assignment)
            return
        variable = variables[depth]
        for sign in (1, -1):
            assignment[variable] = sign
            added = sum(1 for clause in watching[variable] if clause_violated(assignment, clause))
            search(depth + 1, cost + added)
            del assignment[variable]
            if best["cost"] == 0:
                return

    search(0, 0)
    return dict(best["assignment"]), int(best["cost"])  # type: ignore[arg-type]


def unsat_core(clauses: Sequence[tuple[int, Clause]]) -> list[tuple[int, Clause]]:
    """Deletion-minimal subset of clauses that is still unsatisfiable."""

    core = list(clauses)
    index = 0
    while index < len(core):
        trial = core[:index] + core[index + 1 :]
        _, cost = solve_signs([clause for _, clause in trial])
        if cost > 0:
            core = trial
        else:
            index += 1
    return core


def _require_perm(movie: ChartMovie) -> None:
    if movie.kind != "perm":
        raise KindError("Orientation expects a permutation chart")
    report = validate_movie(movie)
    if not report.ok:
        raise InvalidMovieError("; ".join(report.lines()))


def _signed_slices(movie: ChartMovie, strands: StrandGraph, assignment: dict[int, int]) -> list[list[Letter]]:
    slices = []
    for t, word in enumerate(movie.slices):
        letters = []
        for j, letter in enumerate(word):
            sign = assignment.get(strands.strand[(t, j)], 1)
            if strands.parity[(t, j)]:
                sign = -sign
            letters.append(Letter(letter.index, sign))
        slices.append(letters)
    return slices


def orient(movie: ChartMovie) -> ChartMovie | Obstruction:
    """Braid lift of ``movie`` without nodes, or the obstruction to one."""

    _require_perm(movie)
    strands = strand_graph(movie)
    clauses = white_clauses(movie, strands)
    assignment, cost = solve_signs([clause for _, clause in clauses])
    if cost:
        core = unsat_core(clauses)
        variables = sorted({variable for _, clause in core for variable, _ in clause})
        return Obstruction(tuple(t for t, _ in core), tuple(variables))
    slices = _signed_slices(movie, strands, assignment)
    return ChartMovie(
        movie.degree,
        "braid",
        tuple(Word(tuple(letters), "braid") for letters in slices),
        movie.events,
    )


def semi_orient(movie: ChartMovie) -> ChartMovie:
    """Braid lift that brackets every unorientable white vertex with a node pair."""

    _require_perm(movie)
    strands = strand_graph(movie)
    clauses = white_clauses(movie, strands)
    assignment, cost = solve_signs([clause for _, clause in clauses])
    violated = {t for t, clause in clauses if clause_violated(assignment, clause)}
    logger.debug("semi-orientation needs %d node pairs", cost)

    signed = _signed_slices(movie, strands, assignment)
    slices: list[Word] = [Word(tuple(signed[0]), "braid")]
    events: list[ChartEvent] = []
    for t, event in enumerate(movie.events, start=1):
        if t in violated:
            middle = event.position + 1
            before = list(signed[t - 1])
            before[middle] = before[middle].inverse()
            events.append(ChartEvent("node", middle, before[middle].sign))
            slices.append(Word(tuple(before), "braid"))
            after = list(signed[t])
            after[middle] = after[middle].inverse()
            events.append(event)
            slices.append(Word(tuple(after), "braid"))
            events.append(ChartEvent("node", middle, signed[t][middle].sign))
            slices.append(Word(tuple(signed[t]), "braid"))
        else:
            events.append(event)
            slices.append(Word(tuple(signed[t]), "braid"))
    return ChartMovie(movie.degree, "braid", tuple(slices), tuple(events))


__all__ = [
    "Obstruction",
    "StrandGraph",
    "clause_violated",
    "event_links",
    "orient",
    "semi_orient",
    "solve_signs",
    "strand_graph",
    "unsat_core",
    "white_clauses",
]
