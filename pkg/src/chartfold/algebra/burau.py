"""Knot determinant of a braid closure through the reduced Burau matrix at ``t = -1``."""

from __future__ import annotations

import logging

import numpy as np

from ..errors import KindError, NotAKnotError
from .words import Letter, Word, check_degree, perm_image

logger = logging.getLogger(__name__)

BURAU_PARAMETER = -1.0


def reduced_burau(letter: Letter, n: int, t: float = BURAU_PARAMETER) -> np.ndarray:
    """Reduced Burau matrix of one letter on ``n >= 3`` strands."""

    size = n - 1
    matrix = np.eye(size)
    i = letter.index
    if i == 1:
        matrix[0, 0] = -t
        matrix[1, 0] = 1.0
    elif i == n - 1:
        matrix[size - 2, size - 1] = t
        matrix[size - 1, size - 1] = -t
    else:
        row = i - 2
        matrix[row, row + 1] = t
        matrix[row + 1, row + 1] = -t
        matrix[row + 2, row + 1] = 1.0
    if letter.sign < 0:
        matrix = np.linalg.inv(matrix)
    return matrix


def is_knot_closure(beta: Word, strands: int) -> bool:
    if strands == 1:
        return len(beta) == 0
    cycles = perm_image(beta, strands).cycles()
    return len(cycles) == 1


def stabilize(beta: Word, strands: int) -> tuple[Word, int]:
    """Add positive Markov stabilisations until the strand count is odd and at least 3."""

    letters = list(beta.letters)
    while strands < 3 or strands % 2 == 0:
        letters.append(Letter(strands, 1))
        strands += 1
    return Word(tuple(letters), "braid"), strands


def knot_determinant(beta: Word, strands: int) -> int:
    """``|det(I - B(beta))|`` of the reduced Burau matrix at ``t = -1``."""

    if beta.kind != "braid" and len(beta):
        raise KindError("knot_determinant expects a braid-kind word")
    if strands < 1:
        raise ValueError(f"Strand count must be positive, got {strands}")
    if strands > 1:
        check_degree(beta, strands)
    if not is_knot_closure(beta, strands):
        raise NotAKnotError(f"Closure of {beta} on {strands} strands has several components")

    word, n = stabilize(beta, strands)
    if n != strands:
        logger.debug("Stabilised %s from %d to %d strands", beta, strands, n)
    product = np.eye(n - 1)
    for letter in word:
        product = product @ reduced_burau(letter, n)
    value = np.linalg.det(np.eye(n - 1) - product)
    return int(abs(round(value)))


__all__ = ["is_knot_closure", "knot_determinant", "reduced_burau", "stabilize"]
