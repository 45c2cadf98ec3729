"""Exception types raised by chartfold.

Everything derives from ``ValueError`` so callers that already guard bad input
with ``except ValueError`` keep working.
"""

from __future__ import annotations


class ChartfoldError(ValueError):
    """Base class for all library errors."""


class DegreeError(ChartfoldError):
    """A label, index or permutation does not fit the declared degree."""


class KindError(ChartfoldError):
    """Perm-kind and braid-kind data were mixed."""


class NormalizationError(ChartfoldError):
    """A Hurwitz system has no normal form (intransitive or non-identity product)."""


class OrbitCapExceeded(ChartfoldError):
    """Orbit enumeration hit the configured state cap."""

    def __init__(self, cap: int) -> None:
        super().__init__(f"Hurwitz orbit exceeded the cap of {cap} systems")
        self.cap = cap


class InvalidMovieError(ChartfoldError):
    """A movie failed validation where a valid one was required."""


class NotAKnotError(ChartfoldError):
    """A braid closure has more than one component."""


class ColoringError(ChartfoldError):
    """A colour vector is not a Fox 3-colouring of the braid."""


class ParseError(ChartfoldError):
    """Text input could not be parsed; carries the 1-based position."""

    def __init__(self, message: str, *, line: int = 1, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


__all__ = [
    "ChartfoldError",
    "ColoringError",
    "DegreeError",
    "InvalidMovieError",
    "KindError",
    "NormalizationError",
    "NotAKnotError",
    "OrbitCapExceeded",
    "ParseError",
]
