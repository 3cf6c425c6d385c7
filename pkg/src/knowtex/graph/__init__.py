"""Dependency graph model, construction and reduction."""

from knowtex.graph.builder import build_graph, filter_chapter, resolve_chapter
from knowtex.graph.model import (
    DepGraph,
    Edge,
    EdgeKind,
    NodeKind,
    ProofKind,
    StatementNode,
    UnresolvedPolicy,
    display_name,
)
from knowtex.graph.proofs import ProofBinding, associate_proofs
from knowtex.graph.reduction import detect_cycles, transitive_reduce

__all__ = [
    "DepGraph",
    "Edge",
    "EdgeKind",
    "NodeKind",
    "ProofBinding",
    "ProofKind",
    "StatementNode",
    "UnresolvedPolicy",
    "associate_proofs",
    "build_graph",
    "detect_cycles",
    "display_name",
    "filter_chapter",
    "resolve_chapter",
    "transitive_reduce",
]
