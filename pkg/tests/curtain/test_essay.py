import pytest

from chartfold.config import fixtures_dir
from chartfold.curtain import (
    CurtainMove,
    essay_hurwitz_systems,
    parse_essay,
    serialize_essay,
)
from chartfold.errors import ParseError

FIXTURES = fixtures_dir()

FIVE2_MOVES = (
    "1H 1H CC CC IIs CC X CC CC X CC CC X CC CC X IIs CC CC X IIs CC CC CC 2H 2H".split()
)


def test_bare_empty_movie_is_one_chart_essay():
    essay = parse_essay("degree: 2\nkind: braid\n[()]\n")
    assert len(essay.charts) == 1
    assert essay.moves == ()


def test_five2_fixture_follows_the_transcribed_moves():
    essay = parse_essay((FIXTURES / "five2.essay").read_text(encoding="utf-8"))
    assert [move.name for move in essay.moves] == FIVE2_MOVES
    assert len(essay.charts) == 27
    assert str(essay.charts[5]) == "[() b0+ (s1') b1+ (s1' s1) b2- (s1') b1- ()]"


@pytest.mark.parametrize("name", ["mobius.essay", "five2.essay", "broken.essay"])
def test_fixture_essays_round_trip_byte_identical(name):
    text = (FIXTURES / name).read_text(encoding="utf-8")
    assert serialize_essay(parse_essay(text)) == text


def test_round_trip_keeps_declared_window():
    text = "degree: 2\nkind: braid\nwindow: 12\nCHART [()]\n"
    essay = parse_essay(text)
    assert essay.window == 12
    assert parse_essay(serialize_essay(essay)) == essay


def test_move_without_chart_is_rejected():
    with pytest.raises(ParseError) as info:
        parse_essay("degree: 2\nkind: braid\nCHART [()]\nMOVE 1H@1\nMOVE 2H@1\n")
    assert info.value.line == 5


def test_unknown_move_name_is_rejected():
    with pytest.raises(ParseError):
        parse_essay("degree: 2\nkind: braid\nCHART [()]\nMOVE R7@1\nCHART [()]\n")


def test_move_sites_are_one_based():
    with pytest.raises(ValueError):
        CurtainMove("CC", 0)


def test_every_five2_chart_has_trivial_monodromy_product():
    essay = parse_essay((FIXTURES / "five2.essay").read_text(encoding="utf-8"))
    systems = essay_hurwitz_systems(essay)
    assert len(systems) == len(essay.charts)
    assert all(len(system) % 2 == 0 for system in systems)
