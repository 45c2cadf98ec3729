"""Smoke tests for the command-line interface."""

import json
from pathlib import Path

from chartfold import cli
from chartfold.curtain import parse_essay, validate_essay


def test_parser_defaults() -> None:
    parser = cli.build_parser()
    args = parser.parse_args(["det", "--braid", "s1", "--strands", "2"])

    assert args.config == Path("config/chartfold.yml")
    assert args.format == "text"
    assert args.verbose is False
    assert args.command == "det"


def test_determinant_of_the_trefoil(capsys) -> None:
    assert cli.main(["det", "--braid", "s1 s1 s1", "--strands", "2"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_validate_five2_essay(fixtures, capsys) -> None:
    assert cli.main(["validate", str(fixtures / "five2.essay")]) == 0
    assert "ok" in capsys.readouterr().out


def test_validate_broken_essay_reports_on_stderr(fixtures, capsys) -> None:
    assert cli.main(["validate", str(fixtures / "broken.essay")]) == 1
    assert "CC" in capsys.readouterr().err


def test_validate_movie(fixtures, capsys) -> None:
    assert cli.main(["validate", str(fixtures / "example.movie")]) == 0
    assert cli.main(["validate", str(fixtures / "broken.movie")]) == 1


def test_cover_json(fixtures, capsys) -> None:
    assert cli.main(["--format", "json", "cover", str(fixtures / "example.movie")]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["euler_closed"] == 2
    assert payload["component_orbits"] == [[1, 2, 3, 4]]
    assert payload["folding"].startswith(("Embedded", "Immersed"))


def test_hurwitz_equiv(fixtures, capsys) -> None:
    assert cli.main(["hurwitz", "equiv", str(fixtures / "systems.txt")]) == 0
    assert "True" in capsys.readouterr().out


def test_hurwitz_normalize_json(fixtures, capsys) -> None:
    assert cli.main(["--format", "json", "hurwitz", "normalize", str(fixtures / "systems.txt")]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert {entry["normal_form"] for entry in payload} == {"[(1 2) (1 2) (1 3) (1 3)]"}


def test_color_lists_normalized_vectors(capsys) -> None:
    assert cli.main(["color", "--braid", "s1 s1 s1", "--strands", "2"]) == 0
    lines = capsys.readouterr().out.split()
    assert "(12),(23)" in lines


def test_fold_writes_a_valid_essay(tmp_path, capsys) -> None:
    out = tmp_path / "trefoil.essay"
    code = cli.main(
        ["fold", "--braid", "s1 s1 s1", "--strands", "2", "--coloring", "(12),(23)", "--out", str(out)]
    )
    assert code == 0
    assert "node_count: 0" in capsys.readouterr().out
    assert validate_essay(parse_essay(out.read_text(encoding="utf-8"))).ok


def test_fold_without_colorings_fails(capsys) -> None:
    assert cli.main(["fold", "--braid", "s1", "--strands", "2"]) == 1
    assert "no Fox" in capsys.readouterr().err


def test_seifert_prints_an_essay(capsys) -> None:
    assert cli.main(["seifert", "--braid", "s1 s1 s1", "--strands", "2"]) == 0
    essay = parse_essay(capsys.readouterr().out)
    assert validate_essay(essay).ok


def test_render_writes_svg(fixtures, tmp_path) -> None:
    out = tmp_path / "example.svg"
    assert cli.main(["render", str(fixtures / "example.movie"), "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8").startswith("<svg")


def test_parse_errors_exit_with_two(tmp_path, capsys) -> None:
    bad = tmp_path / "bad.movie"
    bad.write_text("degree: 2\nkind: perm\n[() b0+ (t7]\n", encoding="utf-8")
    assert cli.main(["validate", str(bad)]) == 2
    assert cli.main(["det", "--braid", "s1 x2", "--strands", "2"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exits_with_two(fixtures) -> None:
    assert cli.main(["validate", str(fixtures / "does-not-exist.movie")]) == 2


def test_directory_argument_exits_with_two(tmp_path, capsys) -> None:
    assert cli.main(["validate", str(tmp_path)]) == 2
    assert "error" in capsys.readouterr().err


def test_cover_json_flag(fixtures, capsys) -> None:
    assert cli.main(["cover", str(fixtures / "obstruction.movie"), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["folding"] == "Immersed(2)"


def test_orbit_cap_comes_from_config(fixtures, tmp_path, capsys) -> None:
    config = tmp_path / "chartfold.yml"
    config.write_text("hurwitz:\n  orbit_cap: 2\n", encoding="utf-8")
    systems = str(fixtures / "systems.txt")

    assert cli.main(["--format", "json", "hurwitz", "orbit", systems]) == 0
    sizes = json.loads(capsys.readouterr().out)["orbit_sizes"]
    assert len(sizes) == 2 and min(sizes) > 2

    assert cli.main(["--config", str(config), "hurwitz", "orbit", systems]) == 1
    assert "cap of 2" in capsys.readouterr().err
