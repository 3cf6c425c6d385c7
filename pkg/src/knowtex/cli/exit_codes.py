"""Exit codes for the knowtex CLI.

Exit codes follow common conventions for shell scripting:
- 0: Success
- 1: Diagnostics failure (an error diagnostic, or any warning under --strict)
- 2: Usage or I/O error (bad options, unreadable input, bad config or style)

Scripts can check exit codes:
    if knowtex notes.tex --out-dot notes.dot --strict; then
        echo "Clean"
    else
        case $? in
            1) echo "Document problems - see diagnostics" ;;
            2) echo "Usage error - check options and files" ;;
        esac
    fi
"""

from __future__ import annotations

from typing import NoReturn

import typer
from rich.console import Console
from rich.markup import escape

from knowtex.diagnostics import DiagnosticLog
from knowtex.exceptions import KnowTexError

# Exit code constants
SUCCESS = 0
DIAGNOSTICS_FAILED = 1
USAGE_ERROR = 2

# Console for error output (stderr)
stderr_console = Console(stderr=True)


def get_exit_code_for_exception(exc: Exception) -> int:
    """Map exception types to exit codes.

    Every KnowTexError stops the run before any diagnostics are judged, so it
    maps to USAGE_ERROR; anything unexpected maps to DIAGNOSTICS_FAILED.
    """
    if isinstance(exc, KnowTexError):
        return USAGE_ERROR
    return DIAGNOSTICS_FAILED


def get_exit_code_for_diagnostics(log: DiagnosticLog, *, strict: bool) -> int:
    """Exit code for a completed run."""
    if log.has_errors() or (strict and log.has_warnings()):
        return DIAGNOSTICS_FAILED
    return SUCCESS


def exit_with_error(message: str, code: int = USAGE_ERROR) -> NoReturn:
    """Print error message to stderr and exit with code."""
    stderr_console.print(f"[red]Error:[/red] {escape(message)}", emoji=False, highlight=False, soft_wrap=True)
    raise typer.Exit(code=code)


def exit_with_exception(exc: Exception) -> NoReturn:
    """Print exception message to stderr and exit with the mapped code."""
    exit_with_error(str(exc), get_exit_code_for_exception(exc))
