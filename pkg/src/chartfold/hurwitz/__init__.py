"""Hurwitz systems, moves and the classification normal form."""

from .normal_form import (
    MoveRecord,
    NormalForm,
    hc_equivalent,
    hc_orbit_bfs,
    normal_form_of,
    normalize,
    replay,
)
from .systems import (
    HurwitzSystem,
    Transposition,
    conjugate,
    format_system,
    hurwitz_move,
    is_transitive,
    parse_system,
    product,
    read_systems,
)

__all__ = [
    "HurwitzSystem",
    "MoveRecord",
    "NormalForm",
    "Transposition",
    "conjugate",
    "format_system",
    "hc_equivalent",
    "hc_orbit_bfs",
    "hurwitz_move",
    "is_transitive",
    "normal_form_of",
    "normalize",
    "parse_system",
    "product",
    "read_systems",
    "replay",
]
