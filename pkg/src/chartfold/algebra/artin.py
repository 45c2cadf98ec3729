"""Artin action of braids on a free group, used to decide braid equality."""

from __future__ import annotations

from dataclasses import dataclass

from .words import Letter, Word, check_degree

FreeWord = tuple[int, ...]


def _reduce(word: list[int]) -> FreeWord:
    stack: list[int] = []
    for generator in word:
        if stack and stack[-1] == -generator:
            stack.pop()
        else:
            stack.append(generator)
    return tuple(stack)


def _invert(word: FreeWord) -> FreeWord:
    return tuple(-generator for generator in reversed(word))


def _letter_images(letter: Letter) -> dict[int, FreeWord]:
    i, j = letter.index, letter.index + 1
    if letter.sign > 0:
        return {i: (i, j, -i), j: (i,)}
    return {i: (j,), j: (-j, i, j)}


@dataclass(frozen=True, slots=True)
class FreeImage:
    """Images of the free generators ``x1..xn`` under a braid, each freely reduced."""

    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> FreeImage:
        return cls(tuple((generator,) for generator in range(1, n + 1)))

    def apply(self, letter: Letter) -> FreeImage:
        substitution = _letter_images(letter)
        updated: list[FreeWord] = []
        for image in self.images:
            expanded: list[int] = []
            for generator in image:
                target = substitution.get(abs(generator), (abs(generator),))
                expanded.extend(target if generator > 0 else _invert(target))
            updated.append(_reduce(expanded))
        return FreeImage(tuple(updated))


def free_image(word: Word, n: int) -> FreeImage:
    """Artin image of a braid word on ``n`` strands."""

    check_degree(word, n)
    image = FreeImage.identity(n)
    for letter in word:
        image = image.apply(letter)
    return image


def braid_equal(u: Word, v: Word, n: int) -> bool:
    """True when the two braid words are equal in the braid group on ``n`` strands."""

    return free_image(u, n) == free_image(v, n)


__all__ = ["FreeImage", "braid_equal", "free_image"]
