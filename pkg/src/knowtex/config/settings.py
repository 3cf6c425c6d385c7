"""
Configuration management for knowtex.

Provides ConfigManager class for loading, accessing, and validating configuration.

Override Precedence:
    CLI flags > config file > defaults
"""

from __future__ import annotations

import os
from copy import deepcopy
from pathlib import Path
from typing import Any

import yaml

from knowtex.config.defaults import DEFAULT_CONFIG, DEFAULT_CONFIG_PATH
from knowtex.exceptions import ConfigError

VALID_POLICIES = ("drop", "phantom")


class ConfigManager:
    """Manage application configuration with layered override support.

    Configuration is loaded lazily on first access. Supports:
    - Optional YAML config file (never auto-created)
    - Path expansion (~ and environment variables) for file settings
    - Nested key access via dot notation
    - Override precedence: CLI > config > defaults

    Example:
        >>> config = ConfigManager()
        >>> policy = config.get("graph.policy")
        >>> strict = config.is_strict(cli_override=True)
    """

    def __init__(self, config_path: Path | str | None = None) -> None:
        """Initialize ConfigManager.

        Args:
            config_path: Custom config file path. Defaults to ~/.knowtex/config.yaml.
                An explicitly given path must exist; the default path is optional.
        """
        self._explicit = config_path is not None
        self.config_path = Path(config_path) if config_path is not None else DEFAULT_CONFIG_PATH
        self._config: dict[str, Any] = {}
        self._loaded = False

    def load(self) -> dict[str, Any]:
        """Load configuration from file and merge it over the defaults.

        Returns:
            Loaded configuration dict.

        Raises:
            ConfigError: If the config file is missing (explicit path only),
                has invalid YAML syntax, or is not a mapping.
        """
        if self._loaded:
            return self._config

        self._config = deepcopy(DEFAULT_CONFIG)

        if not self.config_path.exists():
            if self._explicit:
                raise ConfigError(
                    f"Config file not found: {self.config_path}",
                    setting=str(self.config_path),
                )
        else:
            try:
                with open(self.config_path, encoding="utf-8") as f:
                    user_config = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ConfigError(
                    f"Invalid YAML in config file: {e}",
                    setting=str(self.config_path),
                ) from e
            if user_config is not None and not isinstance(user_config, dict):
                raise ConfigError(
                    f"Config file must contain a mapping: {self.config_path}",
                    setting=str(self.config_path),
                )
            if user_config:
                self._merge_config(self._config, user_config)

        self._loaded = True
        return self._config

    def get(
        self,
        key: str,
        default: Any = None,
        *,
        cli_override: Any = None,
    ) -> Any:
        """Get configuration value with override precedence.

        Args:
            key: Dot-notation key (e.g., "graph.policy", "output.style").
            default: Default value if key not found.
            cli_override: CLI flag value (highest precedence).

        Returns:
            Configuration value with precedence: CLI > config > default.
        """
        if cli_override is not None:
            return cli_override

        value = self._get_nested(self.load(), key)
        if value is not None:
            return value

        return default

    def get_policy(self, cli_override: str | None = None) -> str:
        """Get the unresolved-label policy.

        Raises:
            ConfigError: If the policy is not drop or phantom.
        """
        policy = str(self.get("graph.policy", default="drop", cli_override=cli_override))
        if policy not in VALID_POLICIES:
            raise ConfigError(
                f"Invalid policy '{policy}'. Valid: {', '.join(VALID_POLICIES)}",
                setting="graph.policy",
            )
        return policy

    def is_reduce_enabled(self, cli_override: bool | None = None) -> bool:
        return self._get_bool("graph.reduce", True, cli_override)

    def is_strict(self, cli_override: bool | None = None) -> bool:
        return self._get_bool("diagnostics.strict", False, cli_override)

    def is_tikz_standalone(self, cli_override: bool | None = None) -> bool:
        return self._get_bool("output.tikz_standalone", False, cli_override)

    def get_style_path(self, cli_override: Path | None = None) -> Path | None:
        """Get the JSON style file path, expanded, or None."""
        value = self.get("output.style", cli_override=cli_override)
        if value is None:
            return None
        return self._expand_path(value)

    def get_html_script_url(self) -> str:
        return str(self.get("output.html_script_url"))

    def get_environment_overrides(self) -> list[str]:
        return self._get_str_list("scan.environments")

    def get_kinds(self) -> list[str]:
        return self._get_str_list("scan.kinds")

    def _get_bool(self, key: str, default: bool, cli_override: bool | None) -> bool:
        value = self.get(key, default=default, cli_override=cli_override)
        if not isinstance(value, bool):
            raise ConfigError(f"Setting '{key}' must be true or false, got {value!r}", setting=key)
        return value

    def _get_str_list(self, key: str) -> list[str]:
        value = self.get(key, default=[])
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise ConfigError(f"Setting '{key}' must be a list of strings", setting=key)
        return list(value)

    def _get_nested(self, config: dict[str, Any], key: str) -> Any:
        """Get nested value using dot notation.

        Args:
            config: Configuration dict.
            key: Dot-notation key (e.g., "graph.policy").

        Returns:
            Nested value or None if not found.
        """
        value: Any = config
        for part in key.split("."):
            if not isinstance(value, dict):
                return None
            value = value.get(part)
            if value is None:
                return None
        return value

    def _merge_config(self, base: dict[str, Any], override: dict[str, Any]) -> None:
        """Recursively merge override config into base config.

        Args:
            base: Base configuration dict (modified in place).
            override: Override values to merge.
        """
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def _expand_path(self, path: str | Path) -> Path:
        """Expand path with ~ and environment variables."""
        path_str = os.path.expandvars(os.path.expanduser(str(path)))
        return Path(path_str)
