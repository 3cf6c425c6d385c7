"""
Extraction of ``\\label``, ``\\uses`` and ``\\proves`` from environment bodies.

Only the occurrence's own body is read; bodies of nested scanned
environments are blanked first so their annotations are not attributed
twice.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterator
from dataclasses import replace

from knowtex.diagnostics import DiagnosticLog
from knowtex.scanner.chapters import read_group
from knowtex.scanner.environments import EnvOccurrence

logger = logging.getLogger(__name__)

_ANNOTATION = re.compile(r"\\(?P<cmd>label|uses|proves)(?![A-Za-z@])\s*(?=\{)")


def _visible_body(occ: EnvOccurrence, masked: str) -> str:
    body_start, body_end = occ.body_span
    body = masked[body_start:body_end]
    for inner in occ.nested:
        lo = max(inner.start, body_start) - body_start
        hi = min(inner.end, body_end) - body_start
        if lo < hi:
            body = body[:lo] + " " * (hi - lo) + body[hi:]
    return body


def iter_annotations(text: str, base: int, log: DiagnosticLog) -> Iterator[tuple[str, str, int]]:
    """Yield ``(command, argument, offset)`` for each annotation in ``text``.

    Arguments are read with balanced-brace scanning; inner braces are passed
    through verbatim. ``base`` is the offset of ``text`` in the document.
    """
    for match in _ANNOTATION.finditer(text):
        open_brace = match.end()
        close = read_group(text, open_brace)
        offset = base + match.start()
        if close is None:
            log.error(f"unbalanced braces in \\{match.group('cmd')} argument", offset=offset)
            continue
        yield match.group("cmd"), text[open_brace + 1 : close], offset


def extract_annotations(
    occ: EnvOccurrence,
    masked: str,
    log: DiagnosticLog | None = None,
) -> EnvOccurrence:
    """Fill label, uses and proves of an occurrence.

    - label: first ``\\label`` argument (trimmed)
    - uses: all ``\\uses`` arguments split on ',', trimmed, empty items
      dropped, de-duplicated keeping first occurrence
    - proves: first ``\\proves`` argument; later ones are reported and ignored

    Args:
        occ: Occurrence from ``scan_environments``.
        masked: The masked text the occurrence was scanned from.
        log: Receives diagnostics (empty uses, repeated proves, ...).

    Returns:
        A copy of ``occ`` with annotations filled.
    """
    log = log if log is not None else DiagnosticLog()
    label: str | None = None
    label_at: int | None = None
    proves: str | None = None
    proves_at: int | None = None
    uses: list[str] = []
    uses_at: list[int] = []

    body = _visible_body(occ, masked)
    for command, argument, offset in iter_annotations(body, occ.body_span.start, log):
        if command == "label":
            if label is None:
                key = argument.strip()
                if key:
                    label, label_at = key, offset
                else:
                    log.warning("empty \\label ignored", offset=offset)
        elif command == "uses":
            items = [item.strip() for item in argument.split(",")]
            items = [item for item in items if item]
            if not items:
                log.warning("empty uses", offset=offset)
            for item in items:
                if item not in uses:
                    uses.append(item)
                    uses_at.append(offset)
        else:
            key = argument.strip()
            if not key:
                log.warning("empty \\proves ignored", offset=offset)
            elif proves is None:
                proves, proves_at = key, offset
            else:
                log.warning(
                    f"second \\proves{{{key}}} ignored; this proof already proves '{proves}'",
                    offset=offset,
                )

    return replace(
        occ,
        label=label,
        label_at=label_at,
        uses=tuple(uses),
        uses_at=tuple(uses_at),
        proves=proves,
        proves_at=proves_at,
    )


def find_stray_annotations(
    masked: str,
    occurrences: list[EnvOccurrence],
    log: DiagnosticLog | None = None,
) -> int:
    """Report ``\\uses``/``\\proves`` outside every scanned environment body.

    Returns:
        Number of stray annotations found (each gets a warning).
    """
    log = log if log is not None else DiagnosticLog()
    bodies = sorted(occ.body_span for occ in occurrences)
    count = 0
    for match in _ANNOTATION.finditer(masked):
        if match.group("cmd") == "label":
            continue
        position = match.start()
        if any(start <= position < end for start, end in bodies):
            continue
        count += 1
        log.warning(
            f"\\{match.group('cmd')} outside any scanned environment is ignored",
            offset=position,
        )
    if count:
        logger.debug("Found %d stray annotations", count)
    return count
