"""Hurwitz systems of transpositions and the moves acting on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Literal

from ..algebra.permutations import Permutation
from ..errors import DegreeError, ParseError

Direction = Literal["forward", "backward"]

_ENTRY_PATTERN = re.compile(r"\(\s*(\d+)\s+(\d+)\s*\)")


@dataclass(frozen=True, slots=True, order=True)
class Transposition:
    """The swap ``(a b)`` stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == self.b or min(self.a, self.b) < 1:
            raise DegreeError(f"Invalid transposition ({self.a} {self.b})")
        if self.a > self.b:
            low, high = self.b, self.a
            object.__setattr__(self, "a", low)
            object.__setattr__(self, "b", high)

    @classmethod
    def from_permutation(cls, perm: Permutation) -> Transposition:
        return cls(*perm.pair())

    def as_permutation(self, n: int) -> Permutation:
        return Permutation.transposition(self.a, self.b, n)

    def conjugate_by(self, g: Permutation) -> Transposition:
        """``g^-1 (a b) g``, which is ``(g(a) g(b))``."""

        return Transposition(g(self.a), g(self.b))

    def conjugate_by_swap(self, other: Transposition) -> Transposition:
        swap = {other.a: other.b, other.b: other.a}
        return Transposition(swap.get(self.a, self.a), swap.get(self.b, self.b))

    def touches(self, point: int) -> bool:
        return point in (self.a, self.b)

    def other(self, point: int) -> int:
        return self.b if point == self.a else self.a

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


@dataclass(frozen=True, slots=True)
class HurwitzSystem:
    """Ordered tuple of transpositions in the symmetric group of ``degree``."""

    entries: tuple[Transposition, ...]
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise DegreeError(f"Degree must be positive, got {self.degree}")
        for entry in self.entries:
            if entry.b > self.degree:
                raise DegreeError(f"Entry {entry} does not fit degree {self.degree}")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]], degree: int) -> HurwitzSystem:
        return cls(tuple(Transposition(a, b) for a, b in pairs), degree)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + " ".join(str(entry) for entry in self.entries) + "]"

    def replace(self, entries: Iterable[Transposition]) -> HurwitzSystem:
        return HurwitzSystem(tuple(entries), self.degree)


def product(system: HurwitzSystem) -> Permutation:
    """Left-to-right product of the entries."""

    result = Permutation.identity(system.degree)
    for entry in system.entries:
        result = result.then(entry.as_permutation(system.degree))
    return result


def is_transitive(system: HurwitzSystem) -> bool:
    """Whether the entries generate a group with a single orbit on ``1..degree``."""

    parent = list(range(system.degree + 1))

    def find(point: int) -> int:
        while parent[point] != point:
            parent[point] = parent[parent[point]]
            point = parent[point]
        return point

    for entry in system.entries:
        parent[find(entry.a)] = find(entry.b)
    return len({find(point) for point in range(1, system.degree + 1)}) == 1


def hurwitz_move(system: HurwitzSystem, k: int, direction: Direction = "forward") -> HurwitzSystem:
    """Act on entries ``k`` and ``k + 1`` (1-based).

    Forward sends ``(x, y)`` to ``(y, y x y)``; backward sends ``(x, y)`` to
    ``(x y x, x)`` and undoes the forward move.
    """

    if not 1 <= k < len(system):
        raise IndexError(f"Hurwitz move position {k} outside 1..{len(system) - 1}")
    entries = list(system.entries)
    x, y = entries[k - 1], entries[k]
    if direction == "forward":
        entries[k - 1], entries[k] = y, x.conjugate_by_swap(y)
    elif direction == "backward":
        entries[k - 1], entries[k] = y.conjugate_by_swap(x), x
    else:
        raise ValueError(f"Unknown move direction: {direction}")
    return system.replace(entries)


def conjugate(system: HurwitzSystem, g: Permutation) -> HurwitzSystem:
    """Entry-wise ``g^-1 a g``."""

    if g.degree != system.degree:
        raise DegreeError("Conjugating permutation has the wrong degree")
    return system.replace(entry.conjugate_by(g) for entry in system.entries)


def parse_system(text: str, degree: int, *, line: int = 1) -> HurwitzSystem:
    """Parse ``[(1 2) (1 2) (2 3)]``."""

    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError(f"Expected a bracketed system, got {text!r}", line=line)
    body = stripped[1:-1]
    if _ENTRY_PATTERN.sub("", body).strip():
        raise ParseError(f"Bad system entry in {text!r}", line=line)
    try:
        return HurwitzSystem.of(
            ((int(a), int(b)) for a, b in _ENTRY_PATTERN.findall(body)), degree
        )
    except DegreeError as exc:
        raise ParseError(str(exc), line=line) from exc


def format_system(system: HurwitzSystem) -> str:
    return str(system)


def read_systems(text: str) -> list[HurwitzSystem]:
    """Read a system file: a ``degree:`` header, then one system per line."""

    degree: int | None = None
    systems: list[HurwitzSystem] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("degree:"):
            try:
                degree = int(line.split(":", 1)[1])
            except ValueError as exc:
                raise ParseError("Bad degree header", line=number) from exc
            continue
        if degree is None:
            raise ParseError("Missing 'degree:' header before the first system", line=number)
        systems.append(parse_system(line, degree, line=number))
    return systems


__all__ = [
    "Direction",
    "HurwitzSystem",
    "Transposition",
    "conjugate",
    "format_system",
    "hurwitz_move",
    "is_transitive",
    "parse_system",
    "product",
    "read_systems",
]
