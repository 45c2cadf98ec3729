"""Loader for the chartfold YAML settings file."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

DEFAULT_CONFIG_PATH = Path("config/chartfold.yml")
DEFAULT_FIXTURES_DIR = Path("tests/fixtures")
FIXTURES_ENV = "CHARTFOLD_FIXTURES"

DEFAULT_COLORS = {
    "label_1": "#1f4fd1",
    "label_2": "#d12f1f",
    "conjugated": "#1f9d3a",
    "node": "#000000",
    "vertex": "#000000",
}


@dataclass(slots=True)
class EssaySettings:
    """Bounds used when matching curtain-move templates."""

    ci_window: int = 8
    ciii_window: int = 4


@dataclass(slots=True)
class HurwitzSettings:
    """Limits for orbit enumeration."""

    orbit_cap: int = 200_000


@dataclass(slots=True)
class RenderSettings:
    """Panel geometry and colours for SVG output."""

    panel_width: int = 220
    panel_height: int = 160
    margin: int = 16
    colors: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_COLORS))


@dataclass(slots=True)
class ChartfoldConfig:
    """Container with every loaded section."""

    version: int = 1
    essay: EssaySettings = field(default_factory=EssaySettings)
    hurwitz: HurwitzSettings = field(default_factory=HurwitzSettings)
    render: RenderSettings = field(default_factory=RenderSettings)


def _section(data: Mapping[str, Any], name: str) -> Mapping[str, Any]:
    node = data.get(name) or {}
    if not isinstance(node, Mapping):
        raise ValueError(f"Config section '{name}' must be a mapping")
    return node


def _positive_int(node: Mapping[str, Any], key: str, default: int) -> int:
    value = int(node.get(key, default))
    if value <= 0:
        raise ValueError(f"Config value '{key}' must be positive, got {value}")
    return value


def load_chartfold_config(
    path: Path | None = None, *, strict: bool = True
) -> ChartfoldConfig:
    """Read the YAML settings file, falling back to defaults when not strict."""

    source = path or DEFAULT_CONFIG_PATH
    if not source.exists():
        if strict:
            raise FileNotFoundError(f"Chartfold config not found: {source}")
        return ChartfoldConfig()

    data = yaml.safe_load(source.read_text(encoding="utf-8"))
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ValueError(f"Invalid chartfold config format: {source}")

    essay_node = _section(data, "essay")
    hurwitz_node = _section(data, "hurwitz")
    render_node = _section(data, "render")

    colors = dict(DEFAULT_COLORS)
    raw_colors = render_node.get("colors") or {}
    if not isinstance(raw_colors, Mapping):
        raise ValueError("Config section 'render.colors' must be a mapping")
    colors.update({str(key): str(value) for key, value in raw_colors.items()})

    return ChartfoldConfig(
        version=int(data.get("version", 1)),
        essay=EssaySettings(
            ci_window=_positive_int(essay_node, "ci_window", 8),
            ciii_window=_positive_int(essay_node, "ciii_window", 4),
        ),
        hurwitz=HurwitzSettings(
            orbit_cap=_positive_int(hurwitz_node, "orbit_cap", 200_000),
        ),
        render=RenderSettings(
            panel_width=_positive_int(render_node, "panel_width", 220),
            panel_height=_positive_int(render_node, "panel_height", 160),
            margin=int(render_node.get("margin", 16)),
            colors=colors,
        ),
    )


def fixtures_dir() -> Path:
    """Directory holding sample movies and essays; overridable from the environment."""

    override = os.environ.get(FIXTURES_ENV)
    return Path(override) if override else DEFAULT_FIXTURES_DIR


__all__ = [
    "ChartfoldConfig",
    "DEFAULT_CONFIG_PATH",
    "EssaySettings",
    "HurwitzSettings",
    "RenderSettings",
    "fixtures_dir",
    "load_chartfold_config",
]
