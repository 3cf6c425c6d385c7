"""CLI package for knowtex."""

from knowtex.cli.exit_codes import (
    DIAGNOSTICS_FAILED,
    SUCCESS,
    USAGE_ERROR,
    exit_with_error,
    exit_with_exception,
    get_exit_code_for_diagnostics,
    get_exit_code_for_exception,
)
from knowtex.cli.formatters import (
    debug,
    info,
    is_quiet_mode,
    is_verbose_mode,
    print_diagnostics,
    set_quiet_mode,
    set_verbose_mode,
    success,
)
from knowtex.cli.main import RunConfig, app, build_run_config, main, run

__all__ = [
    # Main app
    "app",
    "main",
    "run",
    "RunConfig",
    "build_run_config",
    # Exit codes
    "SUCCESS",
    "DIAGNOSTICS_FAILED",
    "USAGE_ERROR",
    "exit_with_error",
    "exit_with_exception",
    "get_exit_code_for_diagnostics",
    "get_exit_code_for_exception",
    # Formatters
    "debug",
    "info",
    "success",
    "print_diagnostics",
    "is_quiet_mode",
    "is_verbose_mode",
    "set_quiet_mode",
    "set_verbose_mode",
]
