"""Local surgery on block charts.

A strand with conjugator ``w`` and label ``a`` is drawn as a block: births of
``w`` nested left to right, an arc of label ``a`` in the middle, then the deaths
in reverse. Every rewrite of the strand is realised here as a run of curtain
moves on that block, each confined to a few neighbouring events, so the block
before and after the run are both canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from ..algebra.words import Letter, Word
from ..chart.movie import ChartEvent, ChartMovie, EventKind, MovieBuilder
from ..errors import KindError

# widest windows the runs below ever produce
CI_WINDOW = 4
CIII_WINDOW = 3


@dataclass(frozen=True, slots=True)
class Op:
    """An event together with the letters it creates, so it can be replayed."""

    kind: EventKind
    position: int
    sign: int = 0
    letters: tuple[Letter, ...] = ()

    def arity(self) -> tuple[int, int]:
        return ChartEvent(self.kind, self.position, self.sign).arity()

    def at(self, position: int) -> Op:
        return replace(self, position=position)


def birth(position: int, letter: Letter) -> Op:
    return Op("type2", position, 1, (letter,))


def death(position: int) -> Op:
    return Op("type2", position, -1)


def insert(position: int, letter: Letter) -> Op:
    return Op("black", position, 1, (letter,))


def delete(position: int) -> Op:
    return Op("black", position, -1)


def node(position: int) -> Op:
    return Op("node", position)


def white(position: int, segment: Iterable[Letter]) -> Op:
    return Op("white", position, 0, tuple(segment))


def chart_of(ops: Iterable[Op], degree: int = 3) -> ChartMovie:
    """Replay ``ops`` from the empty braid word."""

    builder = MovieBuilder(degree, "braid")
    for op in ops:
        if op.kind == "black":
            if op.sign > 0:
                builder.insert(op.position, op.letters[0])
            else:
                builder.delete(op.position)
        elif op.kind == "type2":
            if op.sign > 0:
                builder.birth(op.position, op.letters[0])
            else:
                builder.death(op.position)
        elif op.kind == "white":
            builder.white(op.position, op.letters)
        elif op.kind == "crossing":
            builder.crossing(op.position)
        else:
            builder.node(op.position)
    return builder.build()


def ops_of(chart: ChartMovie) -> list[Op]:
    """Recover the replayable form of a braid chart from its post-slices."""

    if chart.kind != "braid":
        raise KindError("Surgery works on braid charts")
    ops = []
    for event, post in zip(chart.events, chart.slices[1:]):
        p = event.position
        if event.kind in ("black", "type2") and event.sign > 0:
            ops.append(Op(event.kind, p, 1, (post[p],)))
        elif event.kind == "white":
            ops.append(white(p, post.letters[p : p + 3]))
        elif event.kind in ("black", "type2"):
            ops.append(Op(event.kind, p, -1))
        else:
            ops.append(Op(event.kind, p))
    return ops


def block_ops(word: Word, label: int) -> list[Op]:
    n = len(word)
    ops = [birth(k, letter) for k, letter in enumerate(word)]
    ops += [insert(n, Letter(label)), delete(n)]
    ops += [death(k) for k in reversed(range(n))]
    return ops


def bare_ops(word: Word) -> list[Op]:
    """The type-II pairs of a block without its arc."""

    return [birth(k, letter) for k, letter in enumerate(word)] + [
        death(k) for k in reversed(range(len(word)))
    ]


def commute(first: Op, second: Op) -> tuple[Op, Op]:
    """Swap two consecutive events acting on disjoint letters."""

    used_first, made_first = first.arity()
    used_second, made_second = second.arity()
    if second.position >= first.position + made_first:
        return second.at(second.position - made_first + used_first), first
    if second.position + used_second <= first.position:
        return second, first.at(first.position + made_second - used_second)
    raise ValueError(f"{first} and {second} touch the same letters")


Run = list[tuple[str, tuple[Op, ...]]]


@dataclass(slots=True)
class _Surgery:
    ops: list[Op]
    moves: Run = field(default_factory=list)

    def emit(self, name: str) -> None:
        self.moves.append((name, tuple(self.ops)))

    def splice(self, name: str, start: int, stop: int, new: Sequence[Op] = ()) -> None:
        self.ops[start:stop] = list(new)
        self.emit(name)

    def slide(self, index: int, stop: int) -> int:
        """Carry ``ops[index]`` forward until it sits just before ``stop``."""

        while index + 1 < stop:
            self.ops[index], self.ops[index + 1] = commute(self.ops[index], self.ops[index + 1])
            self.emit("CI")
            index += 1
        return index


def rebuild_moves(word: Word, label: int, new_word: Word, new_label: int) -> Run:
    """Trade one canonical block for another through blocks sharing a prefix."""

    surgery = _Surgery(block_ops(word, label))
    common = 0
    while common < min(len(word), len(new_word)) and word[common] == new_word[common]:
        common += 1
    length = len(word)
    while length > common:
        k = length - 1
        surgery.splice("CI", k, k + 4, [insert(k, Letter(label)), delete(k)])
        length = k
    if label != new_label:
        surgery.splice("CI", length, length + 2, [insert(length, Letter(new_label)), delete(length)])
    while length < len(new_word):
        k = length
        surgery.splice(
            "CI",
            k,
            k + 2,
            [birth(k, new_word[k]), insert(k + 1, Letter(new_label)), delete(k + 1), death(k)],
        )
        length += 1
    return surgery.moves


def terminal_moves(word: Word, label: int) -> Run:
    """Drop a last letter that carries the label: one saddle, then two collapses."""

    surgery = _Surgery(block_ops(word, label))
    k = len(word) - 1
    last = word[k]
    cut, kept = (k + 1, Letter(label)) if last.sign > 0 else (k, last)
    surgery.splice("IIs", k + 2, k + 2, [death(cut), birth(cut, kept)])
    surgery.splice("CI", k, k + 3, [insert(k, Letter(label))])
    surgery.splice("CI", k + 1, k + 4, [delete(k)])
    return surgery.moves


def saddle_moves(word: Word, label: int, k: int) -> Run:
    """Cancel ``word[k]`` against the inverse after it.

    A saddle between the two loops leaves the inside of the inner loop outside
    both; each loop is then slid past it and removed.
    """

    surgery = _Surgery(block_ops(word, label))
    inside = 2 * (len(word) - k - 1)
    surgery.splice("IIs", k + 2, k + 2, [death(k), birth(k, word[k])])
    surgery.splice("Z", k + 1, k + 3)
    at = surgery.slide(k + 1, k + 2 + inside)
    surgery.splice("Z", at, at + 2)
    at = surgery.slide(k, k + 1 + inside)
    surgery.splice("IIb", at, at + 2)
    return surgery.moves


def node_moves(word: Word, label: int, k: int) -> Run:
    """Flip the sign of ``word[k]`` when it repeats the letter after it.

    A node pair is born on the outer loop and one node is carried round to the
    far side of the inner loop; the pair is left for ``cancel_runs``.
    """

    surgery = _Surgery(block_ops(word, label))
    surgery.splice("Xi+", k + 1, k + 1, [node(k), node(k)])
    surgery.splice("CI", k, k + 2, [birth(k, word[k].inverse()), node(k + 1)])
    at = surgery.slide(k + 2, len(surgery.ops) - 1 - k)
    surgery.splice("CI", at, at + 2, [node(k + 1), death(k)])
    return surgery.moves


def c3_moves(word: Word, label: int) -> Run:
    """Pull the arc across the last letter through a white vertex."""

    surgery = _Surgery(block_ops(word, label))
    k = len(word) - 1
    last = word[k]
    flipped = Letter(label, -last.sign)
    surgery.splice(
        "CIII",
        k,
        k + 2,
        [
            birth(k, flipped),
            insert(k + 1, Letter(last.index)),
            white(k, (last, Letter(label), last.inverse())),
        ],
    )
    surgery.splice("CIII", k + 2, k + 5, [delete(k + 1), death(k)])
    return surgery.moves


def rewrite_moves(rule: str, word: Word, label: int, site: int) -> Run:
    if rule == "saddle":
        return saddle_moves(word, label, site)
    if rule == "terminal":
        return terminal_moves(word, label)
    if rule == "nodes":
        return node_moves(word, label, site)
    if rule == "c3":
        return c3_moves(word, label)
    raise ValueError(f"No surgery for rule {rule!r}")


def _partner(ops: Sequence[Op], index: int) -> int | None:
    """Index of the next node on the letter flipped at ``ops[index]``."""

    position = ops[index].position
    for later in range(index + 1, len(ops)):
        op = ops[later]
        used, made = op.arity()
        if op.position > position:
            continue
        if op.position + used <= position:
            position += made - used
            continue
        if op.kind == "node":
            return later
        return None
    return None


def cancel_runs(ops: Sequence[Op]) -> tuple[Run, int]:
    """Slide every node onto the next node of its letter and drop the pair."""

    surgery = _Surgery(list(ops))
    pairs = 0
    while True:
        for index, op in enumerate(surgery.ops):
            if op.kind != "node":
                continue
            partner = _partner(surgery.ops, index)
            if partner is None:
                continue
            at = surgery.slide(index, partner)
            surgery.splice("Xi-", at, at + 2)
            pairs += 1
            break
        else:
            return surgery.moves, pairs


def cancel_node_pairs(chart: ChartMovie) -> list[tuple[str, ChartMovie]]:
    """Moves and charts that cancel the node pairs of ``chart`` sharing a letter."""

    moves, _ = cancel_runs(ops_of(chart))
    return [(name, chart_of(ops, chart.degree)) for name, ops in moves]


__all__ = [
    "CIII_WINDOW",
    "CI_WINDOW",
    "Op",
    "Run",
    "bare_ops",
    "birth",
    "block_ops",
    "c3_moves",
    "cancel_node_pairs",
    "cancel_runs",
    "chart_of",
    "commute",
    "death",
    "delete",
    "insert",
    "node",
    "node_moves",
    "ops_of",
    "rebuild_moves",
    "rewrite_moves",
    "saddle_moves",
    "terminal_moves",
    "white",
]
