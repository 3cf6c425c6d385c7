"""LaTeX scanning: masking, chapters, environments and annotations."""

from knowtex.scanner.annotations import extract_annotations, find_stray_annotations
from knowtex.scanner.chapters import ChapterSlice, segment_chapters
from knowtex.scanner.environments import (
    EnvironmentConfig,
    EnvironmentEntry,
    EnvOccurrence,
    parse_override,
    scan_environments,
)
from knowtex.scanner.source import SourceDocument, Span, mask_comments, mask_source

__all__ = [
    "ChapterSlice",
    "EnvOccurrence",
    "EnvironmentConfig",
    "EnvironmentEntry",
    "SourceDocument",
    "Span",
    "extract_annotations",
    "find_stray_annotations",
    "mask_comments",
    "mask_source",
    "parse_override",
    "scan_environments",
    "segment_chapters",
]
