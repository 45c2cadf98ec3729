"""Shared pytest fixtures."""

from pathlib import Path

import pytest

from chartfold.config import fixtures_dir


@pytest.fixture
def fixtures() -> Path:
    return fixtures_dir()
