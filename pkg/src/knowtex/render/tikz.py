"""
TikZ emitter.

Places every node at the coordinates of a LayeredLayout and draws straight
edges between node anchors. The picture needs TikZ with the
``shapes.geometric`` and ``arrows`` libraries and dvips color names; with
``standalone=True`` it is wrapped in a document that loads them.
"""

from __future__ import annotations

import logging
import re
from typing import TYPE_CHECKING

from knowtex.diagnostics import DiagnosticLog
from knowtex.exceptions import LayoutMismatchError
from knowtex.graph.model import DepGraph
from knowtex.render.names import node_names
from knowtex.render.style import StyleConfig
from knowtex.render.templating import render_template

if TYPE_CHECKING:
    from knowtex.layout.layered import LayeredLayout

logger = logging.getLogger(__name__)

_LATEX_SPECIAL = re.compile(r"[\\{}$&#%_~^]")
_LATEX_REPLACEMENTS = {
    "\\": r"\textbackslash{}",
    "{": r"\{",
    "}": r"\}",
    "$": r"\$",
    "&": r"\&",
    "#": r"\#",
    "%": r"\%",
    "_": r"\_",
    "~": r"\textasciitilde{}",
    "^": r"\textasciicircum{}",
}


def latex_escape(text: str) -> str:
    return _LATEX_SPECIAL.sub(lambda m: _LATEX_REPLACEMENTS[m.group()], text)


def _check_layout(graph: DepGraph, layout: LayeredLayout) -> None:
    missing = sorted(set(graph.nodes) - layout.node_ids)
    extra = sorted(layout.node_ids - set(graph.nodes))
    if missing or extra:
        raise LayoutMismatchError(
            f"Layout does not match graph (missing: {missing}, extra: {extra})",
            missing=missing,
            extra=extra,
        )


def emit_tikz(
    graph: DepGraph,
    layout: LayeredLayout,
    style: StyleConfig,
    *,
    standalone: bool = False,
    log: DiagnosticLog | None = None,
) -> str:
    """Render ``graph`` as a ``tikzpicture``.

    Node centres come from ``layout.position``. Edges are drawn between node
    names, not along ``layout.routes``, so TikZ clips them at the drawn
    outline of each node.

    Raises:
        LayoutMismatchError: If ``layout`` was computed for a different node set.
    """
    _check_layout(graph, layout)
    names = node_names(graph.nodes, log)

    nodes = []
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        node_style = style.node_style(node)
        options = f"draw={node_style.color},fill={node_style.fill},{node_style.shape.tikz}"
        if node.phantom:
            options += ",dashed"
        x, y = layout.position[node_id]
        nodes.append(
            {
                "name": names[node_id],
                "x": f"{x:.2f}",
                "y": f"{y:.2f}",
                "options": options,
                "text": latex_escape(node.display),
            }
        )

    edges = []
    for edge in sorted(graph.edges):
        options = f"-{style.arrowhead}"
        if style.is_dashed(edge.kind):
            options += ",dashed"
        edges.append({"source": names[edge.source], "target": names[edge.target], "options": options})

    picture = render_template("graph.tikz.j2", format="tikz", autoescape=False, nodes=nodes, edges=edges)
    logger.debug("TikZ output: %d nodes, %d edges", len(nodes), len(edges))
    if standalone:
        return render_template("standalone.tex.j2", format="tikz", autoescape=False, picture=picture)
    return picture
