"""Console output helpers for the CLI.

Data flows:
- Listings go to stdout via typer.echo (plain text, tab separated)
- Diagnostics, progress and summaries go to stderr
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from rich.console import Console
from rich.markup import escape
from rich.logging import RichHandler

from knowtex.diagnostics import Diagnostic
from knowtex.scanner.source import SourceDocument

# Console for info/progress output (stderr)
stderr_console = Console(stderr=True)

# Module-level state
_quiet_mode = False
_verbose_mode = False


def set_quiet_mode(quiet: bool) -> None:
    global _quiet_mode
    _quiet_mode = quiet


def is_quiet_mode() -> bool:
    return _quiet_mode


def set_verbose_mode(verbose: bool) -> None:
    """Set verbose mode; verbose also routes library logging to stderr at DEBUG."""
    global _verbose_mode
    _verbose_mode = verbose
    if verbose:
        configure_logging(logging.DEBUG)


def is_verbose_mode() -> bool:
    return _verbose_mode


def configure_logging(level: int) -> None:
    """Attach a RichHandler on stderr to the ``knowtex`` logger (once)."""
    logger = logging.getLogger("knowtex")
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(
            RichHandler(console=stderr_console, show_path=False, rich_tracebacks=True)
        )


def debug(message: str) -> None:
    """Print debug message to stderr (only in verbose mode)."""
    if _verbose_mode and not _quiet_mode:
        stderr_console.print(f"[dim]DEBUG: {escape(message)}[/dim]", emoji=False, soft_wrap=True)


def info(message: str) -> None:
    """Print info message to stderr (unless quiet mode)."""
    if not _quiet_mode:
        stderr_console.print(message, markup=False, emoji=False, highlight=False, soft_wrap=True)


def success(message: str) -> None:
    """Print success message to stderr (unless quiet mode)."""
    if not _quiet_mode:
        stderr_console.print(f"[green]{escape(message)}[/green]", emoji=False, highlight=False, soft_wrap=True)


def print_diagnostics(diagnostics: Iterable[Diagnostic], document: SourceDocument) -> None:
    """One ``path:line:col: severity: message`` line per diagnostic, always printed."""
    for diagnostic in diagnostics:
        stderr_console.print(
            diagnostic.format(document),
            markup=False,
            emoji=False,
            highlight=False,
            soft_wrap=True,
        )
