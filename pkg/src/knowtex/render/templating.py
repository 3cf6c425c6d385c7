"""Jinja2 environments for the template-driven emitters."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined, TemplateNotFound

from knowtex.exceptions import RenderError

TEMPLATE_DIR = Path(__file__).parent / "templates"


@lru_cache(maxsize=2)
def get_environment(autoescape: bool) -> Environment:
    """HTML templates are autoescaped; LaTeX templates are not."""
    return Environment(
        loader=FileSystemLoader(str(TEMPLATE_DIR)),
        autoescape=autoescape,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
    )


def render_template(name: str, *, format: str, autoescape: bool, **context: Any) -> str:
    """Render a packaged template.

    Raises:
        RenderError: If the template is missing or fails to render.
    """
    try:
        template = get_environment(autoescape).get_template(name)
    except TemplateNotFound as e:
        raise RenderError(f"Template not found: {e}", format=format) from e
    try:
        return template.render(**context)
    except Exception as e:
        raise RenderError(f"Failed to render {name}: {e}", format=format) from e
