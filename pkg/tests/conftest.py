"""
Shared pytest fixtures for the knowtex test suite.

This module provides reusable fixtures for:
- LaTeX fixture files (ring example, two-chapter document)
- Config isolation (no user config file is ever read)
- Common analysis results
"""

import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

import knowtex.cli.formatters as formatters_mod
import knowtex.config.settings as settings_mod
from knowtex.pipeline import Analysis, analyze
from knowtex.scanner import SourceDocument
from tests.support.fixtures import files as _files  # noqa: F401
from tests.support.fixtures.files import FIXTURES_DIR
from tests.support.helpers.determinism import seed_python_random

pytest_plugins = ["tests.support.fixtures.files"]

# ============================================================================
# Isolation
# ============================================================================


@pytest.fixture(autouse=True)
def _isolate_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Point the default config path at a file that does not exist."""
    monkeypatch.setattr(settings_mod, "DEFAULT_CONFIG_PATH", tmp_path / "no-config" / "config.yaml")


@pytest.fixture(autouse=True)
def _reset_output_modes() -> Iterator[None]:
    """Quiet/verbose flags and the package logger are process-global."""
    logger = logging.getLogger("knowtex")
    handlers, level = list(logger.handlers), logger.level
    formatters_mod.set_quiet_mode(False)
    formatters_mod._verbose_mode = False
    yield
    formatters_mod.set_quiet_mode(False)
    formatters_mod._verbose_mode = False
    logger.handlers[:] = handlers
    logger.setLevel(level)


@pytest.fixture(autouse=True)
def _seed_random() -> None:
    seed_python_random()


# ============================================================================
# Documents
# ============================================================================


@pytest.fixture
def ring_document() -> SourceDocument:
    return SourceDocument.from_path(FIXTURES_DIR / "ring.tex")


@pytest.fixture
def two_chapters_document() -> SourceDocument:
    return SourceDocument.from_path(FIXTURES_DIR / "two_chapters.tex")


@pytest.fixture
def ring_analysis(ring_document: SourceDocument) -> Analysis:
    return analyze(ring_document)


@pytest.fixture
def two_chapters_analysis(two_chapters_document: SourceDocument) -> Analysis:
    return analyze(two_chapters_document)
