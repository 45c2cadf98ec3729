from hypothesis import given, settings

from chartfold.chart import (
    chart_from_pairs,
    extract_hurwitz,
    parse_movie,
    parse_movie_body,
    standard_chart,
    validate_movie,
)
from chartfold.config import fixtures_dir
from chartfold.hurwitz import HurwitzSystem, normal_form_of, product
from tests.strategies import perm_movies

FIXTURES = fixtures_dir()


def test_single_arc_has_two_equal_entries():
    movie = parse_movie_body("[() b0+ (s1') b1- ()]", 2, "braid")
    assert extract_hurwitz(movie) == HurwitzSystem.of([(1, 2), (1, 2)], 2)


def test_empty_movie_has_empty_system():
    assert len(extract_hurwitz(parse_movie_body("[()]", 3, "perm"))) == 0


def test_example_movie_system():
    movie = parse_movie((FIXTURES / "example.movie").read_text(encoding="utf-8"))
    system = extract_hurwitz(movie)
    assert system == HurwitzSystem.of([(1, 2), (3, 4), (3, 4), (2, 3), (1, 2), (1, 3)], 4)
    assert product(system).is_identity()


def test_standard_chart_realises_normal_form():
    for n, m in ((2, 2), (3, 6), (4, 8), (5, 10)):
        movie = standard_chart(n, m)
        assert validate_movie(movie).ok
        assert extract_hurwitz(movie) == normal_form_of(n, m)


def test_chart_from_pairs_realises_arbitrary_pairs():
    system = HurwitzSystem.of([(2, 4), (2, 4), (1, 3), (1, 3)], 4)
    movie = chart_from_pairs(system)
    assert validate_movie(movie).ok
    assert extract_hurwitz(movie) == system


@settings(max_examples=50, deadline=None)
@given(perm_movies())
def test_random_movies_have_trivial_product(movie):
    assert validate_movie(movie).ok
    assert product(extract_hurwitz(movie)).is_identity()
