"""Folding 3-fold covers branched along closed braids.

Each strand ``i`` carries a conjugator word ``w_i`` in the chart labels 1 and 2
and a label ``a_i``. The strand is drawn as one block of the chart: nested type-II
births spelling ``w_i``, an arc of label ``a_i`` in the middle, then the deaths.
Its black vertices have monodromy ``perm(w_i)^-1 tau_{a_i} perm(w_i)``, which is
always the strand colour. Braiding rewrites the conjugators; the simplification
phase shortens them again with saddles, C-III pulls and node pairs until every
strand is back at rest.

Every step is written into the essay as a run of local moves from
:mod:`.surgery`: braiding trades blocks through short CI steps, saddles become
IIs moves, pulls across a letter become CIII moves and sign flips are born as
Xi+ pairs that a later Xi- removes.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import chain
from typing import Iterable, Literal

from ..algebra.words import Letter, Word, free_reduce
from ..chart.monodromy import meridian
from ..chart.movie import ChartMovie
from ..config.settings import EssaySettings
from ..curtain.essay import Essay, EssayWriter
from ..errors import ChartfoldError, DegreeError, KindError
from ..hurwitz.systems import Transposition
from .colorings import COLORS, ColorVector, check_coloring, color_dynamics
from .surgery import (
    CI_WINDOW,
    CIII_WINDOW,
    Op,
    Run,
    bare_ops,
    block_ops,
    cancel_runs,
    chart_of,
    rebuild_moves,
    rewrite_moves,
)

logger = logging.getLogger(__name__)

Rule = Literal["braid", "saddle", "c3", "nodes", "terminal"]
SIMPLIFY_RULES: tuple[Rule, ...] = ("saddle", "c3", "nodes", "terminal")


@dataclass(frozen=True, slots=True)
class StrandState:
    word: Word
    label: int

    @classmethod
    def resting(cls, color: Transposition) -> StrandState:
        """Initial arc for a colour; ``(1 3)`` is an oval of label 2 around label 1."""

        if color == COLORS[0]:
            return cls(Word((), "braid"), 1)
        if color == COLORS[1]:
            return cls(Word((), "braid"), 2)
        return cls(Word((Letter(2),), "braid"), 1)

    def color(self) -> Transposition:
        return meridian(self.word, Letter(self.label), 3)

    def at_rest(self) -> bool:
        return not self.word or (len(self.word) == 1 and self.word[0].index != self.label)

    def __str__(self) -> str:
        return f"{self.word}:{self.label}"


@dataclass(frozen=True, slots=True)
class FoldStep:
    """One logged rewrite with the strand states it leaves behind."""

    rule: Rule
    strand: int
    strands: tuple[StrandState, ...]
    site: int | None = None

    def __str__(self) -> str:
        return f"{self.rule} on strand {self.strand}"


@dataclass(frozen=True, slots=True)
class FoldState:
    colors: ColorVector
    strands: tuple[StrandState, ...]
    log: tuple[FoldStep, ...] = ()

    @classmethod
    def initial(cls, colors: ColorVector) -> FoldState:
        return cls(colors, tuple(StrandState.resting(color) for color in colors))

    def conjugator_length(self) -> int:
        return sum(len(strand.word) for strand in self.strands)


@dataclass(frozen=True, slots=True)
class FoldResult:
    essay: Essay
    node_count: int
    move_log: tuple[FoldStep, ...]
    colors: ColorVector
    final_colors: ColorVector = field(compare=False)
    cancelled_pairs: int = 0

    def move_counts(self) -> Counter[str]:
        return Counter(move.name for move in self.essay.moves)

    def summary(self) -> dict[str, object]:
        return {
            "colors": str(self.colors),
            "node_count": self.node_count,
            "cancelled_pairs": self.cancelled_pairs,
            "charts": len(self.essay.charts),
            "moves": dict(sorted(self.move_counts().items())),
            "rewrites": dict(sorted(Counter(step.rule for step in self.move_log).items())),
        }


def _braid_step(strands: tuple[StrandState, ...], letter: Letter) -> tuple[StrandState, ...]:
    j = letter.index - 1
    x, y = strands[j], strands[j + 1]
    if letter.sign > 0:
        pulled = y.word + Word((Letter(y.label, -1),), "braid") + y.word.inverse() + x.word
        pair = (y, StrandState(free_reduce(pulled), x.label))
    else:
        pushed = x.word + Word((Letter(x.label),), "braid") + x.word.inverse() + y.word
        pair = (StrandState(free_reduce(pushed), y.label), x)
    return strands[:j] + pair + strands[j + 2 :]


def braid_phase(state: FoldState, beta: Word) -> FoldState:
    """Carry the strand states and colours through every crossing of ``beta``."""

    strands, colors = state.strands, state.colors
    log = list(state.log)
    for letter in beta:
        if not 1 <= letter.index < len(strands):
            raise DegreeError(f"Letter index {letter.index} outside 1..{len(strands) - 1}")
        strands = _braid_step(strands, letter)
        colors = color_dynamics(colors, letter)
        log.append(FoldStep("braid", letter.index, strands))
    return FoldState(colors, strands, tuple(log))


def _rewrite(strand: StrandState) -> tuple[Rule, StrandState, int] | None:
    letters = list(strand.word)
    label = strand.label
    for k in range(len(letters) - 1):
        if letters[k + 1] == letters[k].inverse():
            return "saddle", _state(letters[:k] + letters[k + 2 :], label), k
    if letters and letters[-1].index == label:
        return "terminal", _state(letters[:-1], label), len(letters) - 1
    if len(letters) <= 1:
        return None
    before, last = letters[-2], letters[-1]
    if before == last:
        return "nodes", _state(letters[:-2] + [before.inverse(), last], label), len(letters) - 2
    # before carries the label, so the black vertex can be pulled across last
    pulled = letters[:-1] + [Letter(label, -last.sign)]
    return "c3", _state(pulled, last.index), len(letters) - 1


def _state(letters: list[Letter], label: int) -> StrandState:
    return StrandState(Word(tuple(letters), "braid"), label)


def _rank(strand: StrandState) -> int:
    letters = strand.word.letters
    if len(letters) <= 1 or letters[-1].index == strand.label:
        return 0
    if any(letters[k + 1] == letters[k].inverse() for k in range(len(letters) - 1)):
        return 0
    before, last = letters[-2], letters[-1]
    if before == last or before.sign == last.sign:
        return 1
    return 2


def termination_measure(strands: tuple[StrandState, ...]) -> int:
    """Total conjugator length, weighted, plus the rewrites pending before the next cut."""

    return sum(3 * len(strand.word) + _rank(strand) for strand in strands)


def simplify_words(state: FoldState) -> tuple[FoldState, tuple[FoldStep, ...]]:
    """Rewrite every strand to rest, one strand at a time; returns the new steps too."""

    strands = list(state.strands)
    steps: list[FoldStep] = []
    for index in range(len(strands)):
        while (rewrite := _rewrite(strands[index])) is not None:
            rule, strands[index], site = rewrite
            steps.append(FoldStep(rule, index + 1, tuple(strands), site))
    new_steps = tuple(steps)
    return replace(state, strands=tuple(strands), log=state.log + new_steps), new_steps


def block_chart(strands: tuple[StrandState, ...]) -> ChartMovie:
    """Degree-3 braid chart drawing each strand as one block."""

    return chart_of(chain.from_iterable(block_ops(strand.word, strand.label) for strand in strands))


@dataclass(slots=True)
class _BlockWriter:
    """Essay writer over a row of blocks; each move rewrites one block."""

    blocks: list[list[Op]]
    writer: EssayWriter

    @classmethod
    def empty(cls, slots: int) -> _BlockWriter:
        return cls([[] for _ in range(slots)], EssayWriter.starting_empty(3, "braid"))

    def replace(self, slot: int, name: str, ops: Iterable[Op]) -> None:
        self.blocks[slot] = list(ops)
        self.writer.apply(name, chart_of(chain.from_iterable(self.blocks)))

    def run(self, slot: int, moves: Run) -> None:
        for name, ops in moves:
            self.replace(slot, name, ops)


def fold3(
    beta: Word,
    strands: int,
    coloring: ColorVector,
    settings: EssaySettings | None = None,
) -> FoldResult:
    """Degree-3 essay folding the cover branched along the closure of ``beta``."""

    if beta.kind != "braid":
        raise KindError("fold3 expects a braid word")
    if strands < 1 or beta.max_index() >= strands:
        raise DegreeError(f"Braid {beta} does not fit on {strands} strands")
    check_coloring(beta, strands, coloring)
    settings = settings or EssaySettings()
    if settings.ci_window < CI_WINDOW or settings.ciii_window < CIII_WINDOW:
        raise ChartfoldError(
            f"fold3 needs ci_window >= {CI_WINDOW} and ciii_window >= {CIII_WINDOW}"
        )
    colors = coloring.normalized()

    state = FoldState.initial(colors)
    out = _BlockWriter.empty(len(state.strands))
    for slot, strand in enumerate(state.strands):
        if strand.word:
            out.replace(slot, "IIb", bare_ops(strand.word))
        out.replace(slot, "1H", block_ops(strand.word, strand.label))

    # slots[i] is the block currently drawing strand position i
    slots = list(range(len(state.strands)))
    braided = braid_phase(state, beta)
    previous = state.strands
    for letter, step in zip(beta, braided.log):
        j = letter.index - 1
        source, target = (j, j + 1) if letter.sign > 0 else (j + 1, j)
        old, new = previous[source], step.strands[target]
        out.run(slots[source], rebuild_moves(old.word, old.label, new.word, new.label))
        slots[j], slots[j + 1] = slots[j + 1], slots[j]
        previous = step.strands
    logger.debug("braid phase left conjugator length %d", braided.conjugator_length())

    state, steps = simplify_words(braided)
    cancelled = 0
    for step in steps:
        old = previous[step.strand - 1]
        slot = slots[step.strand - 1]
        out.run(slot, rewrite_moves(step.rule, old.word, old.label, step.site or 0))
        if step.rule == "nodes":
            moves, pairs = cancel_runs(out.blocks[slot])
            out.run(slot, moves)
            cancelled += pairs
        previous = step.strands

    for slot in reversed(range(len(slots))):
        strand = previous[slots.index(slot)]
        if strand.word:
            out.replace(slot, "2H", bare_ops(strand.word))
            out.replace(slot, "IIb", [])
        else:
            out.replace(slot, "2H", [])

    node_count = 2 * sum(1 for step in steps if step.rule == "nodes")
    final = ColorVector(tuple(strand.color() for strand in previous))
    essay = out.writer.build()
    logger.debug("fold3 emitted %d moves with %d nodes", len(essay.moves), node_count)
    return FoldResult(essay, node_count, state.log, colors, final, cancelled)


__all__ = [
    "FoldResult",
    "FoldState",
    "FoldStep",
    "SIMPLIFY_RULES",
    "StrandState",
    "block_chart",
    "braid_phase",
    "fold3",
    "simplify_words",
    "termination_measure",
]
