from itertools import product as cartesian

from hypothesis import given, settings

from chartfold.algebra import Letter, Word
from chartfold.chart import (
    ChartMovie,
    Obstruction,
    forget_signs,
    orient,
    parse_movie,
    parse_movie_body,
    semi_orient,
    solve_signs,
    standard_chart,
    validate_movie,
)
from chartfold.chart.orientation import strand_graph, unsat_core
from chartfold.config import fixtures_dir
from tests.strategies import perm_movies

FIXTURES = fixtures_dir()


def _brute_force_orientable(movie: ChartMovie) -> bool:
    strands = strand_graph(movie)
    for signs in cartesian((1, -1), repeat=strands.count):
        slices = []
        for t, word in enumerate(movie.slices):
            letters = []
            for j, letter in enumerate(word):
                sign = signs[strands.strand[(t, j)]] * (-1 if strands.parity[(t, j)] else 1)
                letters.append(Letter(letter.index, sign))
            slices.append(Word(tuple(letters), "braid"))
        lifted = ChartMovie(movie.degree, "braid", tuple(slices), movie.events)
        if validate_movie(lifted).ok:
            return True
    return False


def test_single_arc_orients():
    movie = parse_movie_body("[() b0+ (t1) b1- ()]", 2, "perm")
    result = orient(movie)
    assert isinstance(result, ChartMovie)
    assert validate_movie(result).ok


def test_standard_chart_orients():
    movie = forget_signs(standard_chart(4, 8))
    result = orient(movie)
    assert isinstance(result, ChartMovie)
    assert result.count("node") == 0


def test_example_movie_orients_without_nodes():
    movie = parse_movie((FIXTURES / "example.movie").read_text(encoding="utf-8"))
    oriented = orient(movie)
    assert isinstance(oriented, ChartMovie) and validate_movie(oriented).ok
    assert semi_orient(movie).count("node") == 0


def test_obstruction_fixture_needs_one_node_pair():
    movie = parse_movie((FIXTURES / "obstruction.movie").read_text(encoding="utf-8"))
    result = orient(movie)
    assert isinstance(result, Obstruction)
    assert result.white_events == (5,)
    lifted = semi_orient(movie)
    assert lifted.count("node") == 2
    assert validate_movie(lifted).ok
    assert forget_signs(lifted).slices == movie.slices


def test_contradictory_white_vertices_have_no_solution():
    x, y = 0, 1
    clauses = [((x, 0), (y, 0), (x, 0)), ((x, 0), (y, 1), (x, 0))]
    _, cost = solve_signs(clauses)
    assert cost == 1
    core = unsat_core(list(enumerate(clauses, start=1)))
    assert [index for index, _ in core] == [1, 2]


def test_single_clause_is_satisfiable():
    assignment, cost = solve_signs([((0, 0), (1, 0), (2, 0))])
    assert cost == 0 and len(assignment) == 3


@settings(max_examples=30, deadline=None)
@given(perm_movies(degree=3, max_events=8))
def test_orient_matches_brute_force(movie):
    result = orient(movie)
    assert isinstance(result, ChartMovie) == _brute_force_orientable(movie)
    if isinstance(result, Obstruction):
        assert result.white_events


@settings(max_examples=40, deadline=None)
@given(perm_movies(degree=4, max_events=10))
def test_semi_orientation_always_validates(movie):
    lifted = semi_orient(movie)
    assert validate_movie(lifted).ok
    nodes = lifted.count("node")
    assert nodes % 2 == 0
    assert (nodes == 0) == isinstance(orient(movie), ChartMovie)
    assert forget_signs(lifted).slices == movie.slices
