"""Words, permutations and braid invariants."""

from .artin import FreeImage, braid_equal, free_image
from .burau import is_knot_closure, knot_determinant
from .permutations import Permutation, parse_permutation
from .words import (
    Letter,
    Word,
    braid_word,
    format_word,
    free_reduce,
    parse_word,
    perm_image,
    perm_word,
)

__all__ = [
    "FreeImage",
    "Letter",
    "Permutation",
    "Word",
    "braid_equal",
    "braid_word",
    "format_word",
    "free_image",
    "free_reduce",
    "is_knot_closure",
    "knot_determinant",
    "parse_permutation",
    "parse_word",
    "perm_image",
    "perm_word",
]
