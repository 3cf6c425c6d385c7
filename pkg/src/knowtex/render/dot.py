"""
DOT emitter.

Produces Graphviz source text only; no layout is computed and the Graphviz
binaries are never invoked.
"""

from __future__ import annotations

import logging

import graphviz

from knowtex.diagnostics import DiagnosticLog
from knowtex.graph.model import DepGraph
from knowtex.render.names import node_names
from knowtex.render.style import StyleConfig

logger = logging.getLogger(__name__)


def emit_dot(graph: DepGraph, style: StyleConfig, log: DiagnosticLog | None = None) -> str:
    """Render ``graph`` as a single ``digraph G``.

    Node statements come in lexicographic id order, edge statements in
    (source, target) order. The original label is kept as ``tooltip`` and the
    display name as ``label``.
    """
    names = node_names(graph.nodes, log)
    dot = graphviz.Digraph("G")

    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        node_style = style.node_style(node)
        dot.node(
            names[node_id],
            label=graphviz.nohtml(node.display),
            tooltip=graphviz.nohtml(node_id),
            shape=node_style.shape.value,
            color=node_style.color,
            fillcolor=node_style.fill,
            style="dashed,filled" if node.phantom else "filled",
        )

    for edge in sorted(graph.edges):
        if style.is_dashed(edge.kind):
            dot.edge(names[edge.source], names[edge.target], style="dashed")
        else:
            dot.edge(names[edge.source], names[edge.target])

    source: str = dot.source
    logger.debug("DOT output: %d nodes, %d edges", len(graph.nodes), len(graph.edges))
    return source
