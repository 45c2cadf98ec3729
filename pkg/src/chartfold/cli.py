"""Command-line surface for chart movies, essays, Hurwitz systems and foldings."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Iterable

from chartfold.algebra import Word, knot_determinant, parse_word
from chartfold.chart import (
    ChartMovie,
    Obstruction,
    format_movie_file,
    orient,
    parse_movie,
    semi_orient,
    validate_movie,
)
from chartfold.config import ChartfoldConfig, load_chartfold_config
from chartfold.config.settings import DEFAULT_CONFIG_PATH
from chartfold.cover import cover_invariants, folding_class
from chartfold.curtain import Essay, parse_essay, seifert_essay, serialize_essay, validate_essay
from chartfold.errors import ChartfoldError, DegreeError, KindError, ParseError
from chartfold.folding import fold3, fox_colorings, parse_color_vector
from chartfold.hurwitz import format_system, hc_equivalent, hc_orbit_bfs, normalize, read_systems
from chartfold.render import write_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Create a reusable argument parser for scripts and tests."""
    parser = argparse.ArgumentParser(
        prog="chartfold",
        description="Validate chart movies and essays, classify covers and fold colored braids.",
    )
    parser.add_argument(
        "--config",
        default=DEFAULT_CONFIG_PATH,
        type=Path,
        help="Path to the YAML configuration file (defaults apply when it is missing).",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="Output format for commands that print data.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log progress at DEBUG level.")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Check a movie or essay file.")
    validate.add_argument("path", type=Path)

    cover = commands.add_parser("cover", help="Cover invariants and folding class of a movie.")
    cover.add_argument("path", type=Path)
    cover.add_argument("--json", action="store_true", help="Print the invariants as JSON.")

    orient_cmd = commands.add_parser("orient", help="Braid lift of a permutation movie.")
    orient_cmd.add_argument("path", type=Path)
    orient_cmd.add_argument(
        "--semi", action="store_true", help="Insert node pairs where no orientation exists."
    )

    hurwitz = commands.add_parser(
        "hurwitz", help="Normalize, compare or enumerate the orbits of Hurwitz systems."
    )
    hurwitz.add_argument("action", choices=("normalize", "equiv", "orbit"))
    hurwitz.add_argument("path", type=Path)

    for name, text in (
        ("fold", "Fold the 3-fold cover of a colored braid closure."),
        ("seifert", "Degree-2 essay from the braid-form Seifert surface."),
        ("det", "Determinant of a braid-closure knot."),
        ("color", "Fox 3-colourings of a braid closure."),
    ):
        braid = commands.add_parser(name, help=text)
        braid.add_argument("--braid", required=True, help='Braid word such as "s1 s1 s2\'".')
        braid.add_argument("--strands", required=True, type=int)
        if name == "fold":
            braid.add_argument("--coloring", help="Colour vector such as (12),(23); first found by default.")
        if name in ("fold", "seifert"):
            braid.add_argument("--out", type=Path, help="Write the essay here instead of stdout.")

    render = commands.add_parser("render", help="Draw a movie or essay as SVG.")
    render.add_argument("path", type=Path)
    render.add_argument("--out", required=True, type=Path)
    return parser


def _braid(text: str) -> Word:
    stripped = text.strip()
    if not stripped.startswith("("):
        stripped = f"({stripped})"
    return parse_word(stripped, kind="braid")


def _read(path: Path) -> ChartMovie | Essay:
    text = path.read_text(encoding="utf-8")
    if any(line.lstrip().startswith(("CHART", "MOVE")) for line in text.splitlines()):
        return parse_essay(text)
    return parse_movie(text)


def _movie(path: Path) -> ChartMovie:
    loaded = _read(path)
    if not isinstance(loaded, ChartMovie):
        raise ParseError(f"{path} holds an essay, expected a movie")
    return loaded


def _emit(payload: object, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif isinstance(payload, dict):
        for key, value in payload.items():
            print(f"{key}: {value}")
    else:
        print(payload)


def _write_essay(essay: Essay, out: Path | None) -> None:
    text = serialize_essay(essay)
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")


def _validate(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    loaded = _read(args.path)
    if isinstance(loaded, Essay):
        report = validate_essay(loaded, config.essay)
    else:
        report = validate_movie(loaded)
    if not report.ok:
        for line in report.lines():
            print(line, file=sys.stderr)
        return EXIT_INVALID
    print(f"{args.path}: ok")
    return EXIT_OK


def _cover(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    movie = _movie(args.path)
    payload = cover_invariants(movie).as_dict()
    if movie.kind == "perm":
        payload["folding"] = folding_class(movie).describe()
    _emit(payload, "json" if args.json else args.format)
    return EXIT_OK


def _orient(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    movie = _movie(args.path)
    result = semi_orient(movie) if args.semi else orient(movie)
    if isinstance(result, Obstruction):
        print(result.describe(), file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(format_movie_file(result))
    return EXIT_OK


def _hurwitz(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    systems = read_systems(args.path.read_text(encoding="utf-8"))
    cap = config.hurwitz.orbit_cap
    if args.action == "orbit":
        sizes = [len(hc_orbit_bfs(system, cap)) for system in systems]
        _emit({"orbit_sizes": sizes}, args.format)
        return EXIT_OK
    if args.action == "normalize":
        results = [normalize(system, cap) for system in systems]
        payload = [
            {
                "system": format_system(system),
                "normal_form": format_system(result.system),
                "moves": [str(move) for move in result.moves],
            }
            for system, result in zip(systems, results)
        ]
        if args.format == "json":
            _emit(payload, "json")
        else:
            for entry in payload:
                print(f"{entry['system']} -> {entry['normal_form']} ({len(entry['moves'])} moves)")
        return EXIT_OK
    if len(systems) != 2:
        raise ParseError(f"equiv needs exactly two systems, got {len(systems)}")
    equivalent = hc_equivalent(*systems, cap=cap)
    _emit({"equivalent": equivalent}, args.format)
    return EXIT_OK if equivalent else EXIT_INVALID


def _fold(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    beta = _braid(args.braid)
    if args.coloring:
        coloring = parse_color_vector(args.coloring)
    else:
        found = sorted(fox_colorings(beta, args.strands), key=str)
        if not found:
            print(f"{beta} on {args.strands} strands has no Fox 3-colouring", file=sys.stderr)
            return EXIT_INVALID
        coloring = found[0]
    result = fold3(beta, args.strands, coloring, config.essay)
    summary = result.summary()
    if args.out is None and args.format == "json":
        _emit({**summary, "essay": serialize_essay(result.essay)}, "json")
        return EXIT_OK
    _write_essay(result.essay, args.out)
    if args.out is not None:
        _emit(summary, args.format)
    return EXIT_OK


def _seifert(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    _write_essay(seifert_essay(_braid(args.braid), args.strands), args.out)
    return EXIT_OK


def _det(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    print(knot_determinant(_braid(args.braid), args.strands))
    return EXIT_OK


def _color(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    found = sorted(str(cv) for cv in fox_colorings(_braid(args.braid), args.strands))
    if args.format == "json":
        _emit(found, "json")
    elif not found:
        print("no non-trivial colourings")
    else:
        for line in found:
            print(line)
    return EXIT_OK


def _render(args: argparse.Namespace, config: ChartfoldConfig) -> int:
    path = write_svg(_read(args.path), args.out, config.render)
    print(f"wrote {path}")
    return EXIT_OK


_COMMANDS = {
    "validate": _validate,
    "cover": _cover,
    "orient": _orient,
    "hurwitz": _hurwitz,
    "fold": _fold,
    "seifert": _seifert,
    "det": _det,
    "color": _color,
    "render": _render,
}


def main(argv: Iterable[str] | None = None) -> int:
    """Entry point invoked by `python -m chartfold.cli` or the console script."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        config = load_chartfold_config(args.config, strict=args.config != DEFAULT_CONFIG_PATH)
        return _COMMANDS[args.command](args, config)
    except (ParseError, DegreeError, KindError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ChartfoldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
