"""
Dependency graph data model.

Nodes are labeled statements; edges point from the prerequisite (the used
statement) to the dependent (the statement that uses it). An edge declared in
a statement body is conceptual (drawn dashed); one declared in a proof body is
logical (drawn solid).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace

import networkx as nx

from knowtex.diagnostics import Diagnostic
from knowtex.kinds import EdgeKind, NodeKind, ProofKind, UnresolvedPolicy

__all__ = [
    "DepGraph",
    "Edge",
    "EdgeKind",
    "NodeKind",
    "ProofKind",
    "StatementNode",
    "UnresolvedPolicy",
    "display_name",
]


def display_name(label: str) -> str:
    """Strip everything up to and including the first ':' ("def:ring" -> "ring").

    Falls back to the whole label when nothing would remain.
    """
    _, sep, rest = label.partition(":")
    if sep and rest:
        return rest
    return label


@dataclass(frozen=True)
class StatementNode:
    """A labeled mathematical statement.

    Attributes:
        id: Label string, unique within a graph (e.g. "lem:ring-unit")
        kind: Statement kind; None for phantom nodes
        chapter: Chapter index the statement lives in
        title: Optional bracketed title of the environment
        display: Short name shown in renderings
        statement_uses: Labels used in the statement body
        proof_uses: Labels used in the bound proof body
        has_proof: Whether a proof was bound to the statement
        phantom: True for nodes synthesized for unresolved labels
        offset: Source offset used for diagnostics
    """

    id: str
    kind: NodeKind | None
    chapter: int
    display: str
    title: str | None = None
    statement_uses: tuple[str, ...] = ()
    proof_uses: tuple[str, ...] = ()
    has_proof: bool = False
    phantom: bool = False
    offset: int | None = None


@dataclass(frozen=True, order=True)
class Edge:
    """Directed dependency edge, prerequisite -> dependent."""

    source: str
    target: str
    kind: EdgeKind


@dataclass(frozen=True)
class DepGraph:
    """Statement nodes plus typed edges.

    Edges are kept sorted by (source, target) and hold at most one edge per
    pair. ``diagnostics`` is the run's diagnostic list, shared with the
    DiagnosticLog that built the graph.
    """

    nodes: Mapping[str, StatementNode]
    edges: tuple[Edge, ...] = ()
    reduced: bool = False
    diagnostics: list[Diagnostic] = field(default_factory=list, compare=False)

    @classmethod
    def create(
        cls,
        nodes: Iterable[StatementNode],
        edges: Iterable[Edge],
        *,
        diagnostics: list[Diagnostic] | None = None,
    ) -> DepGraph:
        """Build a graph with sorted nodes and edges.

        Raises:
            ValueError: On self-loops, duplicate pairs or dangling endpoints.
        """
        node_map = {n.id: n for n in sorted(nodes, key=lambda n: n.id)}
        edge_list = sorted(edges)
        seen: set[tuple[str, str]] = set()
        for edge in edge_list:
            if edge.source == edge.target:
                raise ValueError(f"Self-loop on {edge.source}")
            if edge.source not in node_map or edge.target not in node_map:
                raise ValueError(f"Edge {edge.source} -> {edge.target} has an unknown endpoint")
            if (edge.source, edge.target) in seen:
                raise ValueError(f"Duplicate edge {edge.source} -> {edge.target}")
            seen.add((edge.source, edge.target))
        return cls(
            nodes=node_map,
            edges=tuple(edge_list),
            diagnostics=diagnostics if diagnostics is not None else [],
        )

    def edge_pairs(self) -> set[tuple[str, str]]:
        return {(e.source, e.target) for e in self.edges}

    def edge_kind(self, source: str, target: str) -> EdgeKind | None:
        for edge in self.edges:
            if edge.source == source and edge.target == target:
                return edge.kind
        return None

    def with_edges(self, edges: Iterable[Edge], *, reduced: bool) -> DepGraph:
        return replace(self, edges=tuple(sorted(edges)), reduced=reduced)

    def to_networkx(self) -> nx.DiGraph:
        """Directed networkx view; edge attribute ``kind`` holds the EdgeKind."""
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        for edge in self.edges:
            g.add_edge(edge.source, edge.target, kind=edge.kind)
        return g
