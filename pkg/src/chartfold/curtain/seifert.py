"""Degree-2 essays built from the braid-form Seifert surface of a closed braid.

Every strand contributes a disk, born as an isolated arc. Neighbouring disks
are merged into one chain whose small arcs stand for the twisted bands; each
crossing toggles the sign of its band's letter; finally the bands and the last
disk are cut away again.
"""

from __future__ import annotations

import logging

from ..algebra.words import Word
from ..chart.movie import ChartMovie, parse_movie_body
from ..errors import DegreeError, KindError
from .essay import Essay, EssayWriter

logger = logging.getLogger(__name__)

_HEAD = "() b0+ (s1')"
_TAIL = "b1- ()"
_BLOCK = "b0+ (s1') b1- ()"


def _letter(sign: int) -> str:
    return "s1" if sign > 0 else "s1'"


def _band(sign: int) -> str:
    return f"b1+ (s1' {_letter(sign)}) b2- (s1')"


def _chart(*pieces: str) -> ChartMovie:
    body = " ".join(piece for piece in pieces if piece)
    return parse_movie_body(f"[{body}]", 2, "braid")


def _chain(bands: list[int], rest: str = "", tail: str = _TAIL) -> ChartMovie:
    return _chart(_HEAD, *(_band(sign) for sign in bands), tail, rest)


def seifert_essay(beta: Word, strands: int) -> Essay:
    """Valid degree-2 braid essay for the closure of ``beta`` on ``strands`` strands.

    There is one 1-handle and one 2-handle per strand, so the handle counts
    follow the braid rather than the knot: the 3-strand braid
    ``s1 s1 s1 s2 s1' s2`` of 5_2 gives three of each.
    """

    if beta.kind != "braid":
        raise KindError("seifert_essay expects a braid word")
    if strands < 1 or beta.max_index() >= strands:
        raise DegreeError(f"Braid {beta} does not fit on {strands} strands")

    writer = EssayWriter.starting_empty(2, "braid")
    for count in range(1, strands + 1):
        writer.apply("1H", _chart("()", *([_BLOCK] * count)))

    bands: list[int] = []
    for remaining in range(strands - 1, 0, -1):
        blocks = " ".join([_BLOCK] * (remaining - 1))
        incoming = f"II1+ (s1' s1) b2- (s1') b1- () {blocks}"
        writer.apply("CC", _chain(bands, incoming))
        writer.apply("CC", _chain(bands, incoming, tail="b1+ (s1' s1) II1- ()"))
        bands.append(1)
        writer.apply("IIs", _chain(bands, blocks))

    for letter in beta:
        j = letter.index - 1
        sign = bands[j]
        before, after = bands[:j], bands[j + 1 :]
        head = [_band(value) for value in before]
        tail = [_band(value) for value in after]
        old, new = _letter(sign), _letter(-sign)
        born = f"II2+ (s1' {old} {new})"
        bent = f"{born} b3- (s1' {old}) b2- (s1')"
        swapped = f"{born} b2- (s1' {new}) b2- (s1')"
        writer.apply("CC", _chart(_HEAD, *head, bent, *tail, _TAIL))
        writer.apply("X", _chart(_HEAD, *head, swapped, *tail, _TAIL))
        bands[j] = -sign
        writer.apply("CC", _chain(bands))

    while bands:
        bands.pop(0)
        writer.apply("2H", _chain(bands))
    writer.apply("2H", ChartMovie.empty(2, "braid"))
    logger.debug("seifert essay for %s has %d moves", beta, len(writer.moves))
    return writer.build()


__all__ = ["seifert_essay"]
