import pytest

from chartfold.algebra import parse_word
from chartfold.chart import (
    ChartMovie,
    forget_signs,
    format_movie_file,
    parse_movie,
    parse_movie_body,
    serialize_movie,
    slice_word,
    validate_movie,
)
from chartfold.config import fixtures_dir
from chartfold.errors import ParseError

FIXTURES = fixtures_dir()


def _example() -> ChartMovie:
    return parse_movie((FIXTURES / "example.movie").read_text(encoding="utf-8"))


def test_example_movie_is_valid():
    movie = _example()
    assert movie.degree == 4 and movie.kind == "perm"
    assert len(movie) == 9
    assert validate_movie(movie).ok


def test_empty_movie_is_valid():
    assert validate_movie(ChartMovie.empty(3)).ok


def test_slice_word_reads_slices():
    movie = _example()
    assert len(slice_word(movie, 0)) == 0
    assert slice_word(movie, 6) == parse_word("(t2 t1 t2)")
    assert len(slice_word(movie, len(movie))) == 0
    with pytest.raises(IndexError):
        slice_word(movie, 10)


def test_canonical_body_round_trips():
    body = (FIXTURES / "example.movie").read_text(encoding="utf-8").splitlines()[-1]
    assert serialize_movie(parse_movie_body(body, 4, "perm")) == body


@pytest.mark.parametrize("name", ["example.movie", "obstruction.movie", "broken.movie"])
def test_fixture_files_round_trip(name):
    text = (FIXTURES / name).read_text(encoding="utf-8")
    assert format_movie_file(parse_movie(text)) == text


def test_arrow_form_is_accepted():
    movie = parse_movie_body("[() --b0+-> (s1') --b1--> ()]", 2, "braid")
    assert serialize_movie(movie) == "[() b0+ (s1') b1- ()]"


def test_broken_movie_reports_the_event():
    movie = parse_movie((FIXTURES / "broken.movie").read_text(encoding="utf-8"))
    report = validate_movie(movie)
    assert not report.ok
    assert report.diagnostics[0][0] == 2


def test_wrong_white_vertex_is_rejected():
    movie = parse_movie_body("[() b0+ (t1) b0+ (t2 t1) w1 (t1 t1 t2) b1- (t1 t2) b1- (t2) b1- ()]", 3, "perm")
    assert not validate_movie(movie).ok


def test_braid_white_vertex_needs_equal_braids():
    good = parse_movie_body(
        "[() b0+ (s2) b0+ (s1 s2) b2+ (s1 s2 s1') w1 (s2' s1 s2) b1- (s1 s2) b1- (s2) b1- ()]",
        3,
        "braid",
    )
    assert validate_movie(good).ok
    bad = parse_movie_body(
        "[() b0+ (s2) b0+ (s1 s2) b2+ (s1 s2 s1') w1 (s2 s1 s2') b1- (s1 s2') b1- (s2') b1- ()]",
        3,
        "braid",
    )
    assert not validate_movie(bad).ok


def test_nodes_are_forbidden_in_perm_movies():
    movie = parse_movie_body("[() b0+ (t1) n1 (t1) b1- ()]", 2, "perm")
    assert not validate_movie(movie).ok


def test_forget_signs_drops_nodes():
    movie = parse_movie_body("[() b0+ (s1) n1- (s1') n1+ (s1) b1- ()]", 2, "braid")
    assert validate_movie(movie).ok
    projected = forget_signs(movie)
    assert projected.kind == "perm" and len(projected) == 2
    assert validate_movie(projected).ok


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_movie("degree: 2\nkind: perm\n[() b0+ (t1) q1 ()]\n")
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_movie("kind: perm\n[()]\n")
