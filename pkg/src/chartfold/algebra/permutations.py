"""Permutations of ``{1..n}`` composed left to right."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..errors import DegreeError, ParseError

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection stored as its images: ``images[i - 1]`` is where ``i`` goes."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DegreeError(f"Not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        if not (1 <= a <= n and 1 <= b <= n) or a == b:
            raise DegreeError(f"Transposition ({a} {b}) does not fit degree {n}")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def adjacent(cls, index: int, n: int) -> Permutation:
        return cls.transposition(index, index + 1, n)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            points = list(cycle)
            for position, point in enumerate(points):
                if not 1 <= point <= n:
                    raise DegreeError(f"Point {point} outside 1..{n}")
                images[point - 1] = points[(position + 1) % len(points)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""

        if other.degree != self.degree:
            raise DegreeError("Cannot compose permutations of different degree")
        return Permutation(tuple(other(self(point)) for point in range(1, self.degree + 1)))

    def __mul__(self, other: Permutation) -> Permutation:
        return self.then(other)

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for point, image in enumerate(self.images, start=1):
            images[image - 1] = point
        return Permutation(tuple(images))

    def conjugate_by(self, g: Permutation) -> Permutation:
        """``g^-1 self g``; maps the cycle ``(a b)`` to ``(g(a) g(b))``."""

        return g.inverse().then(self).then(g)

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))

    def moved_points(self) -> tuple[int, ...]:
        return tuple(point for point, image in enumerate(self.images, start=1) if image != point)

    def is_transposition(self) -> bool:
        moved = self.moved_points()
        return len(moved) == 2 and self(moved[0]) == moved[1]

    def pair(self) -> tuple[int, int]:
        """Moved points of a transposition, smaller first."""

        if not self.is_transposition():
            raise ValueError(f"{self} is not a transposition")
        a, b = self.moved_points()
        return a, b

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        nontrivial = [cycle for cycle in self.cycles() if len(cycle) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(str(point) for point in cycle) + ")" for cycle in nontrivial)


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``(1 3)(2 4)``; ``()`` is the identity."""

    stripped = text.strip()
    cycles: list[list[int]] = []
    if _CYCLE_PATTERN.sub("", stripped).strip():
        raise ParseError(f"Bad cycle notation: {text!r}")
    for body in _CYCLE_PATTERN.findall(stripped):
        tokens = body.split()
        if not tokens:
            continue
        try:
            cycles.append([int(token) for token in tokens])
        except ValueError as exc:
            raise ParseError(f"Bad cycle notation: {text!r}") from exc
    return Permutation.from_cycles(cycles, n)


__all__ = ["Permutation", "parse_permutation"]
