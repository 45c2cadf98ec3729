"""Chart movies, Hurwitz systems, curtain essays and 3-fold foldings."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("chartfold")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"


__all__ = ["__version__"]
