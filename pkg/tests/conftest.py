"""Pytest configuration and fixtures for chowgen tests."""

import logging
import tempfile
from pathlib import Path
from typing import Generator

import pytest

from chowgen.algebra.ring import C2, C3, IntPoly, T, parse

pytest_plugins = ["pytest_asyncio"]


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def ambient() -> IntPoly:
    """The cubic T^3 + c2T + c3."""
    return T**3 + C2 * T + C3


@pytest.fixture
def poly():
    """Parse a polynomial from its text or LaTeX spelling."""
    return parse


@pytest.fixture(autouse=True)
def restore_chowgen_logger():
    """Undo handler changes that setup_logging makes to the package logger."""
    logger = logging.getLogger("chowgen")
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield
    logger.handlers[:] = handlers
    logger.setLevel(level)
    logger.propagate = propagate
