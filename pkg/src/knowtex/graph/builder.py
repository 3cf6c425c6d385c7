"""
Dependency graph construction and chapter filtering.

One node per labeled statement. A label used in a statement body gives a
conceptual edge; a label used in the bound proof gives a logical edge. When
both exist for the same pair only the logical edge is kept.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from knowtex.diagnostics import DiagnosticLog
from knowtex.exceptions import ChapterSelectionError
from knowtex.graph.model import DepGraph, Edge, EdgeKind, StatementNode, display_name
from knowtex.graph.proofs import ProofBinding
from knowtex.kinds import NodeKind, UnresolvedPolicy
from knowtex.scanner.chapters import ChapterSlice
from knowtex.scanner.environments import EnvOccurrence

logger = logging.getLogger(__name__)


def _own_uses(
    label: str,
    occ: EnvOccurrence,
    log: DiagnosticLog,
) -> list[tuple[str, int]]:
    """Uses of ``occ`` paired with their offsets, minus self references."""
    result = []
    for used, at in zip(occ.uses, occ.uses_at, strict=True):
        if used == label:
            log.warning(f"'{label}' uses itself; self-reference ignored", offset=at)
            continue
        result.append((used, at))
    return result


def build_graph(
    occurrences: Sequence[EnvOccurrence],
    bindings: Sequence[ProofBinding],
    policy: UnresolvedPolicy = UnresolvedPolicy.DROP,
    log: DiagnosticLog | None = None,
) -> DepGraph:
    """Build the unreduced dependency graph.

    Args:
        occurrences: Annotated occurrences (possibly filtered to one chapter).
        bindings: Proof bindings from ``associate_proofs``.
        policy: ``drop`` reports and omits edges to unknown labels;
            ``phantom`` creates a phantom node for them.
        log: Diagnostic log; the returned graph shares its entry list.

    Returns:
        DepGraph with ``reduced`` False.
    """
    log = log if log is not None else DiagnosticLog()
    proof_of = {b.statement.span.start: b.proof for b in bindings}

    statements: dict[str, EnvOccurrence] = {}
    for occ in occurrences:
        if occ.is_proof:
            continue
        if occ.label is None:
            log.warning(f"unlabeled {occ.kind.value} is not added to the graph", offset=occ.offset)
            continue
        if occ.label in statements:
            log.error(
                f"duplicate label '{occ.label}'; keeping the first definition",
                offset=occ.label_at if occ.label_at is not None else occ.offset,
            )
            continue
        statements[occ.label] = occ

    declared: list[tuple[str, list[tuple[str, int]], list[tuple[str, int]]]] = []
    nodes: dict[str, StatementNode] = {}
    for label, occ in statements.items():
        assert isinstance(occ.kind, NodeKind)
        proof = proof_of.get(occ.span.start)
        statement_uses = _own_uses(label, occ, log)
        proof_uses = _own_uses(label, proof, log) if proof is not None else []
        declared.append((label, statement_uses, proof_uses))
        nodes[label] = StatementNode(
            id=label,
            kind=occ.kind,
            chapter=occ.chapter,
            display=display_name(label),
            title=occ.title,
            statement_uses=tuple(u for u, _ in statement_uses),
            proof_uses=tuple(u for u, _ in proof_uses),
            has_proof=proof is not None,
            offset=occ.offset,
        )

    phantoms: dict[str, StatementNode] = {}
    edges: dict[tuple[str, str], EdgeKind] = {}

    def link(used: str, dependent: str, at: int, kind: EdgeKind) -> None:
        if used not in nodes:
            if policy is UnresolvedPolicy.DROP:
                log.warning(f"unresolved label '{used}' in \\uses; edge dropped", offset=at)
                return
            if used not in phantoms:
                phantoms[used] = StatementNode(
                    id=used,
                    kind=None,
                    chapter=nodes[dependent].chapter,
                    display=display_name(used),
                    phantom=True,
                    offset=at,
                )
        key = (used, dependent)
        if kind is EdgeKind.LOGICAL or key not in edges:
            edges[key] = kind

    for label, statement_uses, proof_uses in declared:
        for used, at in statement_uses:
            link(used, label, at, EdgeKind.CONCEPTUAL)
        for used, at in proof_uses:
            link(used, label, at, EdgeKind.LOGICAL)

    graph = DepGraph.create(
        [*nodes.values(), *phantoms.values()],
        [Edge(source, target, kind) for (source, target), kind in edges.items()],
        diagnostics=log.entries,
    )
    logger.debug(
        "Built graph: %d nodes (%d phantom), %d edges",
        len(graph.nodes),
        len(phantoms),
        len(graph.edges),
    )
    return graph


def describe_chapters(chapters: Sequence[ChapterSlice]) -> str:
    return ", ".join(f"{c.index} ({c.title or 'untitled'})" for c in chapters)


def resolve_chapter(selector: str, chapters: Sequence[ChapterSlice]) -> int:
    """Turn a ``--chapter`` value into an index.

    A value that parses as an integer is an index (even if some title equals
    it); anything else must equal a chapter title exactly.

    Raises:
        ChapterSelectionError: If no such chapter exists.
    """
    available = [f"{c.index}\t{c.title}" for c in chapters]
    text = selector.strip()
    try:
        index = int(text)
    except ValueError:
        for chapter in chapters:
            if chapter.title == selector:
                return chapter.index
        raise ChapterSelectionError(
            f"No chapter titled '{selector}'. Available chapters: {describe_chapters(chapters)}",
            available=available,
        ) from None
    if not 0 <= index < len(chapters):
        raise ChapterSelectionError(
            f"Chapter {index} out of range. Available chapters: {describe_chapters(chapters)}",
            available=available,
        )
    return index


def filter_chapter(
    occurrences: Sequence[EnvOccurrence],
    chapter: int,
    chapters: Sequence[ChapterSlice],
) -> list[EnvOccurrence]:
    """Keep only the occurrences of one chapter.

    Labels used from other chapters then follow the unresolved-label policy
    in ``build_graph``.

    Raises:
        ChapterSelectionError: If ``chapter`` is not a valid index.
    """
    if not 0 <= chapter < len(chapters):
        raise ChapterSelectionError(
            f"Chapter {chapter} out of range. Available chapters: {describe_chapters(chapters)}",
            available=[f"{c.index}\t{c.title}" for c in chapters],
        )
    return [occ for occ in occurrences if occ.chapter == chapter]
