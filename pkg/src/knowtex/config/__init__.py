"""Configuration management and settings.

Usage:
    from knowtex.config import ConfigManager

    config = ConfigManager()

    # Access values with override precedence
    policy = config.get_policy(cli_override="phantom")
    reduce = config.is_reduce_enabled()
"""

from knowtex.config.defaults import (
    DEFAULT_CONFIG,
    DEFAULT_CONFIG_DIR,
    DEFAULT_CONFIG_PATH,
    DEFAULT_HTML_SCRIPT_URL,
)
from knowtex.config.settings import ConfigManager

__all__ = [
    "ConfigManager",
    "DEFAULT_CONFIG",
    "DEFAULT_CONFIG_DIR",
    "DEFAULT_CONFIG_PATH",
    "DEFAULT_HTML_SCRIPT_URL",
]
