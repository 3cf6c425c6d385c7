"""
Source documents and masking.

Masking blanks out text that must never be scanned (comments, verbatim
material) by replacing every masked character with a space. The masked text
has exactly the length of the original, so every offset found in it is also
an offset into the original file and diagnostics need no offset bookkeeping.
Newlines inside masked regions are kept.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

from knowtex.exceptions import SourceError


class Span(NamedTuple):
    """Half-open character range [start, end)."""

    start: int
    end: int

    def contains(self, other: Span) -> bool:
        return self.start <= other.start and other.end <= self.end


# Escaped backslash or percent first, so `\\%` still starts a comment.
_COMMENT = re.compile(r"(?P<escape>\\[\\%])|(?P<comment>%[^\n]*)")

_VERBATIM_ENVS = ("verbatim", "verbatim*", "lstlisting", "minted", "comment")

_MASKABLE = re.compile(
    r"(?P<escape>\\[\\%])"
    r"|(?P<comment>%[^\n]*)"
    r"|(?P<env>\\begin\s*\{(?P<name>"
    + "|".join(re.escape(name) for name in _VERBATIM_ENVS)
    + r")\}.*?\\end\s*\{(?P=name)\})"
    r"|(?P<verb>\\verb\*?(?P<delim>[^A-Za-z\s*])[^\n]*?(?P=delim))",
    re.DOTALL,
)


def _blank(segment: str) -> str:
    return "".join("\n" if ch == "\n" else " " for ch in segment)


def mask_comments(text: str) -> str:
    """Replace every LaTeX comment with spaces.

    A comment runs from an unescaped ``%`` to the end of the line (the newline
    itself is kept). ``\\%`` is a literal percent sign.
    """

    def repl(match: re.Match[str]) -> str:
        if match.group("comment") is not None:
            return " " * len(match.group("comment"))
        return match.group(0)

    return _COMMENT.sub(repl, text)


def mask_source(text: str) -> str:
    """Mask comments plus verbatim-like environments and inline ``\\verb``.

    Scans left to right so a ``%`` inside a verbatim block is not a comment and
    a ``\\begin{verbatim}`` inside a comment is not a block.
    """

    def repl(match: re.Match[str]) -> str:
        if match.group("escape") is not None:
            return match.group(0)
        return _blank(match.group(0))

    return _MASKABLE.sub(repl, text)


@dataclass(frozen=True)
class SourceDocument:
    """One LaTeX input file.

    Attributes:
        path: Display path used in diagnostics
        text: Full decoded source
        line_starts: Offset of the first character of every line
    """

    path: str
    text: str
    line_starts: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        starts = [0]
        starts.extend(m.end() for m in re.finditer("\n", self.text))
        object.__setattr__(self, "line_starts", tuple(starts))

    @classmethod
    def from_path(cls, path: Path | str) -> SourceDocument:
        """Read a UTF-8 file (universal newlines).

        Raises:
            SourceError: If the file is missing, unreadable or not UTF-8.
        """
        file_path = Path(path)
        try:
            text = file_path.read_text(encoding="utf-8")
        except FileNotFoundError as e:
            raise SourceError(f"File not found: {file_path}", path=str(file_path), reason="missing") from e
        except UnicodeDecodeError as e:
            raise SourceError(
                f"File is not valid UTF-8: {file_path} ({e.reason} at byte {e.start})",
                path=str(file_path),
                reason="encoding",
            ) from e
        except OSError as e:
            raise SourceError(f"Cannot read {file_path}: {e.strerror}", path=str(file_path), reason="io") from e
        return cls(path=str(path), text=text)

    def locate(self, offset: int) -> tuple[int, int]:
        """Resolve an offset to 1-based (line, column).

        Offsets past the end clamp to the end of the text.
        """
        offset = max(0, min(offset, len(self.text)))
        index = bisect_right(self.line_starts, offset) - 1
        return index + 1, offset - self.line_starts[index] + 1

    def line_of(self, offset: int) -> int:
        return self.locate(offset)[0]
