"""Config loaders and dataclasses for chartfold tuning."""

from .settings import (
    ChartfoldConfig,
    EssaySettings,
    HurwitzSettings,
    RenderSettings,
    fixtures_dir,
    load_chartfold_config,
)

__all__ = [
    "ChartfoldConfig",
    "EssaySettings",
    "HurwitzSettings",
    "RenderSettings",
    "fixtures_dir",
    "load_chartfold_config",
]
