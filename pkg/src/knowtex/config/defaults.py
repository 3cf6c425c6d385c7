"""
Default configuration values for knowtex.

These defaults are used when:
- No config file exists
- Config file doesn't specify a value
- Override precedence: CLI flags > config file > defaults
"""

from pathlib import Path
from typing import Any

# Config file location
DEFAULT_CONFIG_DIR = Path.home() / ".knowtex"
DEFAULT_CONFIG_PATH = DEFAULT_CONFIG_DIR / "config.yaml"

DEFAULT_HTML_SCRIPT_URL = "https://unpkg.com/@viz-js/viz@3.2.4/lib/viz-standalone.js"

# Default configuration values
DEFAULT_CONFIG: dict[str, Any] = {
    "scan": {
        "environments": [],  # PATTERN=KIND overrides
        "kinds": [],  # empty = every kind
    },
    "graph": {
        "policy": "drop",  # drop, phantom
        "reduce": True,
    },
    "diagnostics": {
        "strict": False,
    },
    "output": {
        "style": None,  # path to a JSON style file
        "html_script_url": DEFAULT_HTML_SCRIPT_URL,
        "tikz_standalone": False,
    },
}

# Documented template users can copy to ~/.knowtex/config.yaml
DEFAULT_CONFIG_TEMPLATE = """\
# knowtex configuration
# Location: ~/.knowtex/config.yaml (or pass --config FILE)
#
# Override precedence: CLI flags > this file > defaults

scan:
  # Extra environment aliases, same syntax as --env
  # Example: ["^(satz|thm)$=theorem"]
  environments: []
  # Restrict scanning to these kinds (empty = all)
  kinds: []

graph:
  # What to do with \\uses targets that are not defined: drop, phantom
  policy: drop
  # Remove edges implied by longer paths
  reduce: true

diagnostics:
  # Treat warnings as failures (exit code 1)
  strict: false

output:
  # JSON style file with node/edge overrides
  style: null
  # Client-side Graphviz renderer used by the HTML preview
  html_script_url: https://unpkg.com/@viz-js/viz@3.2.4/lib/viz-standalone.js
  # Wrap TikZ output in a compilable standalone document
  tikz_standalone: false
"""
