"""Covering surfaces of chart movies."""

from .complex import BaseComplex, CellComplex, base_complex, build_cell_complex
from .invariants import (
    CoverInvariants,
    Embedded,
    FoldingClass,
    Immersed,
    cover_invariants,
    folding_class,
    sheet_orbits,
    system_invariants,
)

__all__ = [
    "BaseComplex",
    "CellComplex",
    "CoverInvariants",
    "Embedded",
    "FoldingClass",
    "Immersed",
    "base_complex",
    "build_cell_complex",
    "cover_invariants",
    "folding_class",
    "sheet_orbits",
    "system_invariants",
]
