from hypothesis import given, settings

from chartfold.chart import (
    ChartMovie,
    chart_from_pairs,
    forget_signs,
    orient,
    parse_movie,
    parse_movie_body,
    semi_orient,
    standard_chart,
)
from chartfold.config import fixtures_dir
from chartfold.cover import Embedded, Immersed, cover_invariants, folding_class
from chartfold.hurwitz import HurwitzSystem
from tests.strategies import perm_movies

FIXTURES = fixtures_dir()

ALPHA = HurwitzSystem.of([(1, 2), (1, 2), (1, 2), (1, 2), (2, 3), (2, 3)], 3)


def test_empty_movie_is_trivial_cover():
    invariants = cover_invariants(ChartMovie.empty(3))
    assert invariants.components == 3
    assert invariants.genus_per_component == (0, 0, 0)
    assert invariants.euler_closed == 6
    assert invariants.boundary_circles == 3


def test_alpha_movie_is_a_torus():
    invariants = cover_invariants(chart_from_pairs(ALPHA))
    assert invariants.components == 1
    assert invariants.component_orbits == (frozenset({1, 2, 3}),)
    assert invariants.euler_closed == 0
    assert invariants.genus_per_component == (1,)


def test_single_arc_is_a_sphere():
    invariants = cover_invariants(parse_movie_body("[() b0+ (t1) b1- ()]", 2, "perm"))
    assert invariants.components == 1
    assert invariants.euler_closed == 2
    assert invariants.genus_per_component == (0,)


def test_example_movie_invariants():
    movie = parse_movie((FIXTURES / "example.movie").read_text(encoding="utf-8"))
    invariants = cover_invariants(movie)
    assert invariants.euler_closed == 2
    assert invariants.branch_points == 6
    assert invariants.as_dict()["component_orbits"] == [[1, 2, 3, 4]]


def test_disconnected_cover_splits_euler_characteristic():
    system = HurwitzSystem.of([(1, 2), (1, 2), (3, 4), (3, 4), (3, 4), (3, 4)], 4)
    invariants = cover_invariants(chart_from_pairs(system))
    assert invariants.component_orbits == (frozenset({1, 2}), frozenset({3, 4}))
    assert invariants.euler_per_component == (2, 0)
    assert invariants.genus_per_component == (0, 1)


def test_standard_chart_folds_as_embedding():
    movie = forget_signs(standard_chart(3, 6))
    result = folding_class(movie)
    assert isinstance(result, Embedded)
    assert result.describe() == "Embedded"


def test_obstruction_fixture_folds_as_immersion():
    movie = parse_movie((FIXTURES / "obstruction.movie").read_text(encoding="utf-8"))
    result = folding_class(movie)
    assert isinstance(result, Immersed)
    assert result.describe() == "Immersed(2)"


@settings(max_examples=60, deadline=None)
@given(perm_movies(degree=4, max_events=12))
def test_invariants_are_consistent(movie):
    invariants = cover_invariants(movie)
    assert invariants.euler_closed % 2 == 0
    assert sum(invariants.euler_per_component) == invariants.euler_closed
    assert all(genus >= 0 for genus in invariants.genus_per_component)
    assert sum(len(orbit) for orbit in invariants.component_orbits) == movie.degree


@settings(max_examples=40, deadline=None)
@given(perm_movies(degree=3, max_events=10))
def test_folding_class_follows_orientation(movie):
    result = folding_class(movie)
    if isinstance(orient(movie), ChartMovie):
        assert isinstance(result, Embedded)
    else:
        assert isinstance(result, Immersed)
        assert result.node_count == semi_orient(movie).count("node")
        assert result.node_count >= 2
