"""
Chapter segmentation.

Only ``\\chapter`` and ``\\chapter*`` split a document; sections do not.
A document without chapters is a single implicit chapter with an empty title.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from knowtex.diagnostics import DiagnosticLog
from knowtex.scanner.source import Span

logger = logging.getLogger(__name__)

# \chapter{..}, \chapter*{..}, \chapter[short]{..}
_CHAPTER = re.compile(r"\\chapter(?![A-Za-z@])\*?\s*(?:\[[^\]\n]*\]\s*)?\{")


@dataclass(frozen=True)
class ChapterSlice:
    """One chapter of the document.

    Attributes:
        title: Chapter title ("" for the implicit whole-document chapter)
        index: 0-based ordinal
        span: Character range in the masked text
    """

    title: str
    index: int
    span: Span


def read_group(text: str, open_brace: int, stop: int | None = None) -> int | None:
    """Find the matching ``}`` for the ``{`` at ``open_brace``.

    Escaped braces (``\\{``, ``\\}``) do not count. Returns the offset of the
    closing brace, or None if the group is not closed before ``stop``.
    """
    end = len(text) if stop is None else stop
    depth = 0
    i = open_brace
    while i < end:
        ch = text[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return i
        i += 1
    return None


def segment_chapters(masked: str, log: DiagnosticLog | None = None) -> list[ChapterSlice]:
    """Split masked text into chapters.

    Each slice runs from its ``\\chapter`` command to the next one (or the end
    of the document). Text before the first chapter belongs to the first slice
    so the slices cover the whole document.

    Args:
        masked: Comment-masked source text.
        log: Receives a diagnostic for chapter titles with unbalanced braces;
            such titles are truncated at the end of their line.

    Returns:
        Disjoint slices ordered by start offset.
    """
    log = log if log is not None else DiagnosticLog()
    matches = list(_CHAPTER.finditer(masked))
    if not matches:
        logger.debug("No \\chapter commands; using one implicit chapter")
        return [ChapterSlice(title="", index=0, span=Span(0, len(masked)))]

    titles: list[str] = []
    for position, match in enumerate(matches):
        open_brace = match.end() - 1
        stop = matches[position + 1].start() if position + 1 < len(matches) else None
        close = read_group(masked, open_brace, stop)
        line_end = masked.find("\n", match.end())
        line_end = len(masked) if line_end == -1 else line_end
        if close is None:
            log.error("unbalanced braces in chapter title", offset=match.start())
            titles.append(masked[match.end() : line_end].strip())
        else:
            titles.append(" ".join(masked[match.end() : close].split()))

    slices = []
    for index, match in enumerate(matches):
        start = 0 if index == 0 else match.start()
        end = matches[index + 1].start() if index + 1 < len(matches) else len(masked)
        slices.append(ChapterSlice(title=titles[index], index=index, span=Span(start, end)))

    logger.debug("Found %d chapters", len(slices))
    return slices


def chapter_at(chapters: list[ChapterSlice], offset: int) -> int:
    """Index of the chapter containing ``offset``."""
    for chapter in reversed(chapters):
        if chapter.span.start <= offset:
            return chapter.index
    return 0
