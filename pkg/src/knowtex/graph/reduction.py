"""
Cycle detection and transitive reduction.

Reduction works on the condensation (strongly connected components collapsed
to single vertices): an edge between two components is dropped when the
target component is also reachable through a longer path. Edges inside a
component are never touched, so cyclic input degrades gracefully. Edge kind
is ignored for reachability and preserved on every surviving edge.
"""

from __future__ import annotations

import logging

import networkx as nx

from knowtex.diagnostics import DiagnosticLog
from knowtex.graph.model import DepGraph

logger = logging.getLogger(__name__)


def detect_cycles(graph: DepGraph, log: DiagnosticLog | None = None) -> list[tuple[str, ...]]:
    """Strongly connected components with more than one node.

    Args:
        graph: Built dependency graph.
        log: Receives one warning per component.

    Returns:
        Components as sorted id tuples, ordered by their first id.
    """
    g = graph.to_networkx()
    components = sorted(
        tuple(sorted(component))
        for component in nx.strongly_connected_components(g)
        if len(component) > 1
    )
    if log is not None:
        for component in components:
            log.warning(
                f"dependency cycle between {', '.join(component)}",
                offset=graph.nodes[component[0]].offset,
            )
    return components


def transitive_reduce(graph: DepGraph) -> DepGraph:
    """Remove every edge implied by a longer path.

    Returns:
        A new graph with ``reduced`` True and the same reachability.
    """
    g = graph.to_networkx()
    condensed = nx.condensation(g)
    member_of: dict[str, int] = condensed.graph["mapping"]
    kept_between = set(nx.transitive_reduction(condensed).edges())

    kept = [
        edge
        for edge in graph.edges
        if member_of[edge.source] == member_of[edge.target]
        or (member_of[edge.source], member_of[edge.target]) in kept_between
    ]
    logger.debug("Reduction kept %d of %d edges", len(kept), len(graph.edges))
    return graph.with_edges(kept, reduced=True)
