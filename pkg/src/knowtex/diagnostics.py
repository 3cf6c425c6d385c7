"""
Diagnostics collected while scanning and building a dependency graph.

Every stage of the pipeline reports document problems into a shared
DiagnosticLog instead of raising. Positions are character offsets into the
source text; SourceDocument resolves them to line/column when printing.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from knowtex.scanner.source import SourceDocument


class Severity(str, Enum):
    """Diagnostic severity."""

    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """One problem found in the input document.

    Attributes:
        severity: error or warning
        message: Human-readable description
        offset: Character offset into the source text (None if unknown)
    """

    severity: Severity
    message: str
    offset: int | None = None

    def format(self, document: SourceDocument) -> str:
        """Render as ``path:line:col: severity: message``."""
        if self.offset is None:
            return f"{document.path}: {self.severity.value}: {self.message}"
        line, column = document.locate(self.offset)
        return f"{document.path}:{line}:{column}: {self.severity.value}: {self.message}"


@dataclass
class DiagnosticLog:
    """Ordered collection of diagnostics for one document run.

    Example:
        log = DiagnosticLog()
        log.warning("empty uses", offset=120)
        if log.has_errors():
            ...
    """

    entries: list[Diagnostic] = field(default_factory=list)

    def error(self, message: str, *, offset: int | None = None) -> None:
        self.entries.append(Diagnostic(Severity.ERROR, message, offset))

    def warning(self, message: str, *, offset: int | None = None) -> None:
        self.entries.append(Diagnostic(Severity.WARNING, message, offset))

    def has_errors(self) -> bool:
        return any(d.severity is Severity.ERROR for d in self.entries)

    def has_warnings(self) -> bool:
        return any(d.severity is Severity.WARNING for d in self.entries)

    def in_document_order(self) -> list[Diagnostic]:
        """Diagnostics sorted by offset; unpositioned ones last, otherwise stable."""
        return sorted(
            self.entries,
            key=lambda d: (d.offset is None, d.offset if d.offset is not None else 0),
        )

    def __iter__(self) -> Iterator[Diagnostic]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)
