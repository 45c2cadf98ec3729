"""Curtain essays: movies of chart movies for folded covers of the 3-sphere."""

from .essay import (
    MOVE_NAMES,
    CurtainMove,
    Essay,
    EssayWriter,
    essay_hurwitz_systems,
    first_difference,
    parse_essay,
    serialize_essay,
)
from .seifert import seifert_essay
from .validate import HandleCounts, check_move, handle_counts, move_window, validate_essay

__all__ = [
    "MOVE_NAMES",
    "CurtainMove",
    "Essay",
    "EssayWriter",
    "HandleCounts",
    "check_move",
    "essay_hurwitz_systems",
    "first_difference",
    "handle_counts",
    "move_window",
    "parse_essay",
    "seifert_essay",
    "serialize_essay",
    "validate_essay",
]
