"""Emitters: DOT, TikZ and HTML preview, plus the style table they share."""

from knowtex.render.dot import emit_dot
from knowtex.render.html import embed_dot, emit_html
from knowtex.render.names import node_names, sanitize
from knowtex.render.style import (
    KNOWN_COLORS,
    EdgeStyle,
    LineStyle,
    NodeShape,
    NodeStyle,
    StyleConfig,
    default_style,
    load_style,
    parse_style,
)
from knowtex.render.tikz import emit_tikz, latex_escape

__all__ = [
    "KNOWN_COLORS",
    "EdgeStyle",
    "LineStyle",
    "NodeShape",
    "NodeStyle",
    "StyleConfig",
    "default_style",
    "embed_dot",
    "emit_dot",
    "emit_html",
    "emit_tikz",
    "latex_escape",
    "load_style",
    "node_names",
    "parse_style",
    "sanitize",
]
