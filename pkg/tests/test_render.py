from xml.etree import ElementTree

import pytest

from chartfold.chart import ChartMovie, parse_movie, parse_movie_body
from chartfold.config import RenderSettings, fixtures_dir
from chartfold.curtain import parse_essay
from chartfold.errors import InvalidMovieError
from chartfold.folding import StrandState, block_chart
from chartfold.hurwitz import Transposition
from chartfold.render import render_svg

FIXTURES = fixtures_dir()


def _shapes(svg: str, tag: str) -> list[ElementTree.Element]:
    root = ElementTree.fromstring(svg)
    return [node for node in root.iter() if node.tag.endswith(tag)]


def test_empty_movie_draws_only_the_frame():
    svg = render_svg(ChartMovie.empty(2, "perm"))
    assert len(_shapes(svg, "rect")) == 1
    assert not _shapes(svg, "line")


def test_rendering_is_byte_stable():
    movie = parse_movie((FIXTURES / "example.movie").read_text(encoding="utf-8"))
    assert render_svg(movie) == render_svg(movie)


def test_essay_gets_one_panel_per_chart():
    essay = parse_essay((FIXTURES / "five2.essay").read_text(encoding="utf-8"))
    settings = RenderSettings()
    svg = render_svg(essay, settings)
    root = ElementTree.fromstring(svg)
    assert int(float(root.get("height"))) == settings.panel_height * len(essay.charts)
    assert len(_shapes(svg, "text")) == len(essay.charts)


def test_nodes_are_squares_and_labels_use_the_palette():
    movie = parse_movie_body("[() b0+ (s1') n1+ (s1) n1- (s1') b1- ()]", 2, "braid")
    settings = RenderSettings()
    svg = render_svg(movie, settings)
    squares = [node for node in _shapes(svg, "rect") if node.get("width") == "6"]
    assert len(squares) == 2
    assert settings.colors["label_1"] in svg


def test_invalid_movies_are_refused():
    movie = parse_movie((FIXTURES / "broken.movie").read_text(encoding="utf-8"))
    with pytest.raises(InvalidMovieError):
        render_svg(movie)


def test_arc_conjugated_to_one_three_uses_its_own_colour():
    settings = RenderSettings()
    oval = block_chart((StrandState.resting(Transposition(1, 3)),))
    svg = render_svg(oval, settings)
    assert settings.colors["conjugated"] in svg
    assert settings.colors["label_2"] in svg


def test_plain_arcs_keep_their_label_colours():
    settings = RenderSettings()
    strands = (StrandState.resting(Transposition(1, 2)), StrandState.resting(Transposition(2, 3)))
    svg = render_svg(block_chart(strands), settings)
    assert settings.colors["label_1"] in svg and settings.colors["label_2"] in svg
    assert settings.colors["conjugated"] not in svg
