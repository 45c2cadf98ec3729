"""Chart movies, their validation, monodromy and orientation."""

from .monodromy import (
    black_monodromies,
    chart_from_pairs,
    extract_hurwitz,
    meridian,
    standard_chart,
)
from .movie import (
    ChartEvent,
    ChartMovie,
    MovieBuilder,
    concat_movies,
    forget_signs,
    format_movie_file,
    parse_movie,
    parse_movie_body,
    serialize_movie,
    slice_word,
)
from .orientation import Obstruction, orient, semi_orient, solve_signs
from .validate import ValidationReport, validate_movie

__all__ = [
    "ChartEvent",
    "ChartMovie",
    "MovieBuilder",
    "Obstruction",
    "ValidationReport",
    "black_monodromies",
    "chart_from_pairs",
    "concat_movies",
    "extract_hurwitz",
    "forget_signs",
    "format_movie_file",
    "meridian",
    "orient",
    "parse_movie",
    "parse_movie_body",
    "semi_orient",
    "serialize_movie",
    "slice_word",
    "solve_signs",
    "standard_chart",
    "validate_movie",
]
