"""
End-to-end analysis of one document.

    mask -> segment chapters -> scan environments -> extract annotations
    -> associate proofs -> (filter chapter) -> build graph -> detect cycles
    -> (transitive reduction)

Everything here is side-effect free; the CLI decides what to write.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from knowtex.diagnostics import DiagnosticLog
from knowtex.graph import (
    DepGraph,
    ProofBinding,
    UnresolvedPolicy,
    associate_proofs,
    build_graph,
    detect_cycles,
    filter_chapter,
    resolve_chapter,
    transitive_reduce,
)
from knowtex.render.names import node_names
from knowtex.scanner import (
    ChapterSlice,
    EnvironmentConfig,
    EnvOccurrence,
    SourceDocument,
    extract_annotations,
    find_stray_annotations,
    mask_source,
    scan_environments,
    segment_chapters,
)

logger = logging.getLogger(__name__)


@dataclass
class Analysis:
    """Everything computed for one document.

    Attributes:
        document: The source document
        chapters: Chapter slices (always at least one)
        occurrences: Annotated occurrences of the whole document
        bindings: Proof bindings that take part in the graph
        unreduced: Graph before transitive reduction
        graph: Final graph (reduced unless reduction was disabled)
        cycles: Nontrivial strongly connected components
        log: Diagnostics of the run
        selected_chapter: Index of the selected chapter, if any
    """

    document: SourceDocument
    chapters: list[ChapterSlice]
    occurrences: list[EnvOccurrence]
    bindings: list[ProofBinding]
    unreduced: DepGraph
    graph: DepGraph
    cycles: list[tuple[str, ...]] = field(default_factory=list)
    log: DiagnosticLog = field(default_factory=DiagnosticLog)
    selected_chapter: int | None = None

    @property
    def removed_edges(self) -> int:
        return len(self.unreduced.edges) - len(self.graph.edges)

    @property
    def selected_occurrences(self) -> list[EnvOccurrence]:
        if self.selected_chapter is None:
            return self.occurrences
        return [occ for occ in self.occurrences if occ.chapter == self.selected_chapter]


def scan_document(
    document: SourceDocument,
    env_config: EnvironmentConfig,
    log: DiagnosticLog,
) -> tuple[list[ChapterSlice], list[EnvOccurrence]]:
    """Chapters and annotated occurrences of a document."""
    masked = mask_source(document.text)
    chapters = segment_chapters(masked, log)
    occurrences = [
        extract_annotations(occ, masked, log)
        for occ in scan_environments(masked, env_config, chapters, log)
    ]
    find_stray_annotations(masked, occurrences, log)
    logger.debug(
        "%s: %d chapters, %d environments", document.path, len(chapters), len(occurrences)
    )
    return chapters, occurrences


def analyze(
    document: SourceDocument,
    env_config: EnvironmentConfig | None = None,
    *,
    chapter: int | str | None = None,
    policy: UnresolvedPolicy = UnresolvedPolicy.DROP,
    reduce: bool = True,
) -> Analysis:
    """Run the whole pipeline on ``document``.

    Proofs are associated on the whole document; when a chapter is selected,
    only its statements (and the proofs bound to them) build the graph. A
    string chapter is a selector as typed on the command line: an index or
    an exact title.

    Raises:
        ChapterSelectionError: If ``chapter`` is out of range.
    """
    log = DiagnosticLog()
    env_config = env_config or EnvironmentConfig.default()
    chapters, occurrences = scan_document(document, env_config, log)
    bindings = associate_proofs(occurrences, log)

    selected = occurrences
    if isinstance(chapter, str):
        chapter = resolve_chapter(chapter, chapters)
    if chapter is not None:
        selected = filter_chapter(occurrences, chapter, chapters)
        bindings = [b for b in bindings if b.statement.chapter == chapter]

    unreduced = build_graph(selected, bindings, policy, log)
    cycles = detect_cycles(unreduced, log)
    graph = transitive_reduce(unreduced) if reduce else unreduced
    node_names(graph.nodes, log)

    logger.debug(
        "Graph: %d nodes, %d edges (%d removed by reduction)",
        len(graph.nodes),
        len(graph.edges),
        len(unreduced.edges) - len(graph.edges),
    )
    return Analysis(
        document=document,
        chapters=chapters,
        occurrences=occurrences,
        bindings=bindings,
        unreduced=unreduced,
        graph=graph,
        cycles=cycles,
        log=log,
        selected_chapter=chapter,
    )
