"""Self-contained HTML preview: the DOT source rendered client-side by viz.js."""

from __future__ import annotations

from knowtex.config.defaults import DEFAULT_HTML_SCRIPT_URL
from knowtex.diagnostics import DiagnosticLog
from knowtex.graph.model import DepGraph
from knowtex.render.dot import emit_dot
from knowtex.render.style import StyleConfig
from knowtex.render.templating import render_template


def embed_dot(dot_source: str) -> str:
    """Make DOT text safe inside a <script> element.

    Only the ``</`` sequence needs care; text without it is returned unchanged.
    """
    if "</" not in dot_source:
        return dot_source
    return dot_source.replace("</", "<\\/")


def emit_html(
    graph: DepGraph,
    style: StyleConfig,
    *,
    title: str = "Dependency graph",
    script_url: str = DEFAULT_HTML_SCRIPT_URL,
    log: DiagnosticLog | None = None,
) -> str:
    """Render an HTML page embedding exactly one DOT block and one external script.

    The embedded block equals ``emit_dot`` output byte for byte, except that
    any ``</`` (possible only inside labels or tooltips) is written as
    ``<\\/`` so it cannot close the script element.
    """
    dot_source = emit_dot(graph, style, log)
    return render_template(
        "preview.html.j2",
        format="html",
        autoescape=True,
        title=title,
        dot_source=embed_dot(dot_source),
        script_url=script_url,
        node_count=len(graph.nodes),
        edge_count=len(graph.edges),
    )
