"""Normal form of Hurwitz systems under Hurwitz moves and conjugation.

A transitive system of ``m`` transpositions in degree ``n`` with trivial
product is equivalent to ``(12)`` repeated ``m - 2(n - 2)`` times followed by
``(13), (13), (14), (14), ..., (1n), (1n)``. :func:`normalize` reaches it with
moves only and records them; a bounded search covers anything the constructive
pass does not finish.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal

from ..algebra.permutations import Permutation
from ..errors import NormalizationError, OrbitCapExceeded
from .systems import (
    HurwitzSystem,
    Transposition,
    conjugate,
    hurwitz_move,
    is_transitive,
    product,
)

logger = logging.getLogger(__name__)

DEFAULT_ORBIT_CAP = 200_000
_GREEDY_ROUNDS = 10_000

MoveKind = Literal["forward", "backward", "conjugate"]


@dataclass(frozen=True, slots=True)
class MoveRecord:
    """One logged step: a Hurwitz move at ``position`` or a conjugation by ``by``."""

    kind: MoveKind
    position: int = 0
    by: Permutation | None = None

    def __str__(self) -> str:
        if self.kind == "conjugate":
            return f"conjugate {self.by}"
        return f"{self.kind} {self.position}"


@dataclass(slots=True)
class NormalForm:
    """Result of :func:`normalize` with the log that produced it."""

    system: HurwitzSystem
    moves: list[MoveRecord] = field(default_factory=list)
    used_search: bool = False


def normal_form_of(n: int, m: int) -> HurwitzSystem:
    """The target system for degree ``n`` and length ``m``."""

    if n == 1:
        return HurwitzSystem((), 1)
    ones = m - 2 * (n - 2)
    entries = [Transposition(1, 2)] * ones
    for k in range(3, n + 1):
        entries.extend([Transposition(1, k)] * 2)
    return HurwitzSystem(tuple(entries), n)


def apply_move(system: HurwitzSystem, move: MoveRecord) -> HurwitzSystem:
    if move.kind == "conjugate":
        assert move.by is not None
        return conjugate(system, move.by)
    return hurwitz_move(system, move.position, move.kind)


def replay(system: HurwitzSystem, moves: Iterable[MoveRecord]) -> HurwitzSystem:
    """Re-apply a move log."""

    for move in moves:
        system = apply_move(system, move)
    return system


def check_normalizable(system: HurwitzSystem) -> None:
    n, m = system.degree, len(system)
    if n > 1 and m == 0:
        raise NormalizationError("Empty system in degree above 1 is not transitive")
    if not is_transitive(system):
        raise NormalizationError(f"System {system} is not transitive")
    if not product(system).is_identity():
        raise NormalizationError(f"System {system} has non-identity product")
    if n > 1 and (m < 2 * (n - 1) or m % 2):
        raise NormalizationError(f"No normal form for degree {n} and length {m}")


class _Normalizer:
    """Mutable working copy that logs every move it applies."""

    def __init__(self, system: HurwitzSystem) -> None:
        self.entries = list(system.entries)
        self.degree = system.degree
        self.moves: list[MoveRecord] = []
        self.rounds = 0

    def move(self, position: int, kind: MoveKind) -> None:
        self.rounds += 1
        if self.rounds > _GREEDY_ROUNDS:
            raise RuntimeError("greedy normalisation did not settle")
        x, y = self.entries[position - 1], self.entries[position]
        if kind == "forward":
            self.entries[position - 1], self.entries[position] = y, x.conjugate_by_swap(y)
        else:
            self.entries[position - 1], self.entries[position] = y.conjugate_by_swap(x), x
        self.moves.append(MoveRecord(kind, position))

    def slide_right(self, index: int, stop: int) -> int:
        """Carry entry ``index`` (0-based) unchanged to ``stop`` with backward moves."""

        while index < stop:
            self.move(index + 1, "backward")
            index += 1
        return index

    def slide_pair_right(self, index: int, stop: int) -> int:
        """Carry the equal pair at ``index``/``index+1`` so it starts at ``stop``."""

        while index < stop:
            self.move(index + 2, "backward")
            self.move(index + 1, "backward")
            index += 1
        return index

    def slide_pair_left(self, index: int, stop: int) -> int:
        while index > stop:
            self.move(index, "forward")
            self.move(index + 1, "forward")
            index -= 1
        return index

    def gather(self, top: int, length: int) -> int:
        """Move entries avoiding ``top`` in front of those touching it; returns the split."""

        changed = True
        while changed:
            changed = False
            for index in range(length - 1):
                if self.entries[index].touches(top) and not self.entries[index + 1].touches(top):
                    self.move(index + 1, "forward")
                    changed = True
        return sum(1 for entry in self.entries[:length] if not entry.touches(top))

    def run(self, top: int, length: int) -> None:
        """Normalise ``entries[:length]``, a transitive system on ``1..top``."""

        if top <= 2:
            return
        split = self.gather(top, length)
        while length - split > 2:
            pair_index = next(
                (
                    index
                    for index in range(split, length - 1)
                    if self.entries[index] != self.entries[index + 1]
                ),
                None,
            )
            if pair_index is not None:
                # (x top), (y top) -> (y top), (x y); the new entry rejoins the prefix
                self.move(pair_index + 1, "forward")
                split = self.gather(top, length)
                continue
            x = self.entries[split].other(top)
            donor = next(
                (index for index in range(split) if self.entries[index].touches(x)), None
            )
            if donor is None:
                raise RuntimeError("no prefix entry meets the repeated suffix letter")
            self.slide_right(donor, split - 1)
            self.move(split, "backward")
            self.move(split + 1, "forward")
            split = self.gather(top, length)

        self.run(top - 1, split)

        y = self.entries[split].other(top)
        if y != 1:
            anchor = next(
                index
                for index in range(split - 1)
                if self.entries[index] == Transposition(1, y)
                and self.entries[index + 1] == Transposition(1, y)
            )
            start = self.slide_pair_right(anchor, split - 2)
            position = start + 2
            for offset in (0, 1, 1, 0):
                self.move(position + offset, "backward")
            self.slide_pair_left(start, anchor)


def normalize(system: HurwitzSystem, cap: int = DEFAULT_ORBIT_CAP) -> NormalForm:
    """Bring a transitive identity-product system to its normal form."""

    check_normalizable(system)
    target = normal_form_of(system.degree, len(system))
    if system.degree <= 2:
        return NormalForm(system=target)

    worker = _Normalizer(system)
    try:
        worker.run(system.degree, len(system))
        reached = HurwitzSystem(tuple(worker.entries), system.degree)
    except (RuntimeError, StopIteration) as exc:
        logger.info("Constructive normalisation stalled (%s); searching instead", exc)
        reached = None
    if reached == target:
        return NormalForm(system=target, moves=worker.moves)

    path = _search_path(system, target, cap)
    if path is None:
        raise NormalizationError(f"Could not reach the normal form of {system}")
    return NormalForm(system=target, moves=path, used_search=True)


def _neighbours(system: HurwitzSystem) -> Iterable[tuple[MoveRecord, HurwitzSystem]]:
    for position in range(1, len(system)):
        for kind in ("forward", "backward"):
            yield MoveRecord(kind, position), hurwitz_move(system, position, kind)
    for index in range(1, system.degree):
        g = Permutation.adjacent(index, system.degree)
        yield MoveRecord("conjugate", by=g), conjugate(system, g)


def _search_path(
    start: HurwitzSystem, target: HurwitzSystem, cap: int
) -> list[MoveRecord] | None:
    parents: dict[HurwitzSystem, tuple[HurwitzSystem, MoveRecord] | None] = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if current == target:
            path: list[MoveRecord] = []
            while parents[current] is not None:
                previous, move = parents[current]
                path.append(move)
                current = previous
            return list(reversed(path))
        for move, neighbour in _neighbours(current):
            if neighbour not in parents:
                if len(parents) >= cap:
                    raise OrbitCapExceeded(cap)
                parents[neighbour] = (current, move)
                queue.append(neighbour)
    return None


def hc_orbit_bfs(system: HurwitzSystem, cap: int = DEFAULT_ORBIT_CAP) -> set[HurwitzSystem]:
    """Closure of ``system`` under Hurwitz moves and conjugation."""

    seen = {system}
    queue = deque([system])
    while queue:
        current = queue.popleft()
        for _, neighbour in _neighbours(current):
            if neighbour not in seen:
                if len(seen) >= cap:
                    raise OrbitCapExceeded(cap)
                seen.add(neighbour)
                queue.append(neighbour)
    return seen


def hc_equivalent(a: HurwitzSystem, b: HurwitzSystem, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Whether two normalisable systems share a normal form."""

    return normalize(a, cap).system == normalize(b, cap).system


__all__ = [
    "DEFAULT_ORBIT_CAP",
    "MoveRecord",
    "NormalForm",
    "apply_move",
    "check_normalizable",
    "hc_equivalent",
    "hc_orbit_bfs",
    "normal_form_of",
    "normalize",
    "replay",
]
