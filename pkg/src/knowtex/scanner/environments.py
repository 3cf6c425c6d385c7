"""
Environment configuration and stack-based environment scanning.

Environment names are mapped to node kinds through regular expressions, so
aliases such as ``thm`` or ``defn`` are recognized. Matching is
case-insensitive and anchored (the whole name must match).

Override layering: entries added later through ``with_overrides`` form a new
layer. A name matched by any entry of a higher layer is classified by that
layer only; inside a layer the first matching entry wins.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable
from dataclasses import dataclass, replace

from knowtex.diagnostics import DiagnosticLog
from knowtex.exceptions import UsageError
from knowtex.kinds import NodeKind, ProofKind
from knowtex.scanner.chapters import ChapterSlice, chapter_at
from knowtex.scanner.source import Span

logger = logging.getLogger(__name__)

DEFAULT_ENVIRONMENTS: tuple[tuple[str, NodeKind], ...] = (
    (r"definition|defn|def", NodeKind.DEFINITION),
    (r"theorem|thm", NodeKind.THEOREM),
    (r"lemma|lem", NodeKind.LEMMA),
    (r"proposition|prop", NodeKind.PROPOSITION),
    (r"corollary|cor", NodeKind.COROLLARY),
    (r"construction|constr", NodeKind.CONSTRUCTION),
    (r"example|ex", NodeKind.EXAMPLE),
    (r"remark|rmk|rem", NodeKind.REMARK),
)

DEFAULT_PROOF_PATTERNS: tuple[str, ...] = (r"^proof$",)

_ENV_COMMAND = re.compile(r"\\(?P<cmd>begin|end)(?![A-Za-z@])\s*\{(?P<name>[^{}\n]*)\}")
_TITLE_OPEN = re.compile(r"[ \t]*\[")
_TITLE_STOP = re.compile(r"\\(?:begin|end)(?![A-Za-z@])|\n[ \t]*\n")


def _compile(pattern: str, token: str) -> re.Pattern[str]:
    try:
        return re.compile(pattern, re.IGNORECASE)
    except re.error as e:
        raise UsageError(f"Invalid regular expression in '{token}': {e}", token=token) from e


@dataclass(frozen=True)
class EnvironmentEntry:
    """One ``pattern -> kind`` mapping."""

    pattern: re.Pattern[str]
    kind: NodeKind
    layer: int = 0


@dataclass(frozen=True)
class EnvironmentConfig:
    """Which environments are scanned, and as what.

    Attributes:
        entries: Statement environment mappings
        proof_patterns: Patterns matching proof environments
    """

    entries: tuple[EnvironmentEntry, ...]
    proof_patterns: tuple[re.Pattern[str], ...]

    @classmethod
    def default(cls) -> EnvironmentConfig:
        return cls(
            entries=tuple(
                EnvironmentEntry(_compile(pattern, pattern), kind)
                for pattern, kind in DEFAULT_ENVIRONMENTS
            ),
            proof_patterns=tuple(_compile(p, p) for p in DEFAULT_PROOF_PATTERNS),
        )

    def with_overrides(self, overrides: Iterable[str]) -> EnvironmentConfig:
        """Add a layer of ``PATTERN=KIND`` overrides.

        Raises:
            UsageError: On a malformed token, invalid regex or unknown kind.
        """
        tokens = list(overrides)
        if not tokens:
            return self
        layer = max((e.layer for e in self.entries), default=0) + 1
        added = [parse_override(token, layer) for token in tokens]
        return replace(self, entries=(*added, *self.entries))

    def restrict(self, kinds: Iterable[NodeKind]) -> EnvironmentConfig:
        """Keep only entries for the given kinds (empty = keep all)."""
        wanted = set(kinds)
        if not wanted:
            return self
        return replace(self, entries=tuple(e for e in self.entries if e.kind in wanted))

    def _winning_layer(self, name: str) -> list[EnvironmentEntry]:
        matching = [e for e in self.entries if e.pattern.fullmatch(name)]
        if not matching:
            return []
        top = max(e.layer for e in matching)
        return [e for e in matching if e.layer == top]

    def classify(self, name: str) -> NodeKind | ProofKind | None:
        """Kind for an environment name, or None if it is not scanned."""
        winners = self._winning_layer(name)
        if winners:
            return winners[0].kind
        if any(p.fullmatch(name) for p in self.proof_patterns):
            return ProofKind.PROOF
        return None

    def conflicts(self, name: str) -> list[NodeKind]:
        """Distinct kinds the winning layer assigns to ``name`` (len > 1 = conflict)."""
        kinds: list[NodeKind] = []
        for entry in self._winning_layer(name):
            if entry.kind not in kinds:
                kinds.append(entry.kind)
        return kinds if len(kinds) > 1 else []


def parse_override(token: str, layer: int = 1) -> EnvironmentEntry:
    """Parse ``PATTERN=KIND`` (the last '=' separates the kind)."""
    pattern, sep, kind_name = token.rpartition("=")
    if not sep or not pattern.strip() or not kind_name.strip():
        raise UsageError(f"Environment override must be PATTERN=KIND, got '{token}'", token=token)
    try:
        kind = NodeKind.parse(kind_name)
    except ValueError as e:
        raise UsageError(f"{e} (in '{token}')", token=token) from None
    return EnvironmentEntry(_compile(pattern.strip(), token), kind, layer)


@dataclass(frozen=True)
class EnvOccurrence:
    """One matched environment.

    Attributes:
        env_name: Literal name from ``\\begin{...}``
        kind: Node kind, or ProofKind.PROOF
        span: Whole environment, ``\\begin`` through ``\\end{...}``
        body_span: Text between the begin command (and title) and ``\\end``
        chapter: Chapter index
        title: Bracketed optional argument of ``\\begin``
        label: First ``\\label`` argument in the body
        uses: ``\\uses`` items, de-duplicated in first-seen order
        proves: First ``\\proves`` argument
        uses_at: Offset of the ``\\uses`` command that introduced each item
        label_at: Offset of the ``\\label`` command
        proves_at: Offset of the ``\\proves`` command
        nested: Spans of directly nested scanned environments
    """

    env_name: str
    kind: NodeKind | ProofKind
    span: Span
    body_span: Span
    chapter: int = 0
    title: str | None = None
    label: str | None = None
    uses: tuple[str, ...] = ()
    proves: str | None = None
    uses_at: tuple[int, ...] = ()
    label_at: int | None = None
    proves_at: int | None = None
    nested: tuple[Span, ...] = ()

    @property
    def is_proof(self) -> bool:
        return self.kind is ProofKind.PROOF

    @property
    def offset(self) -> int:
        return self.span.start


def _read_title(masked: str, start: int) -> tuple[str | None, int, int | None]:
    """Optional ``[...]`` right after ``\\begin{name}``.

    The argument may not run past a blank line or the next ``\\begin``/``\\end``.

    Returns:
        (title, body start, offset of an unclosed ``[`` or None)
    """
    match = _TITLE_OPEN.match(masked, start)
    if match is None:
        return None, start, None
    bound = _TITLE_STOP.search(masked, match.end())
    stop = bound.start() if bound else len(masked)
    depth = 0
    i = match.end()
    while i < stop:
        ch = masked[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "]" and depth == 0:
            return " ".join(masked[match.end() : i].split()), i + 1, None
        i += 1
    return None, start, match.end() - 1


def scan_environments(
    masked: str,
    config: EnvironmentConfig,
    chapters: list[ChapterSlice],
    log: DiagnosticLog | None = None,
) -> list[EnvOccurrence]:
    """Find scanned environments in document order.

    ``\\begin``/``\\end`` are matched with one stack per environment name, so
    nesting works. Annotations are not extracted here (see
    ``extract_annotations``).

    Args:
        masked: Masked source text.
        config: Environment configuration.
        chapters: Chapter slices of the same text.
        log: Receives unmatched ``\\end`` / unclosed ``\\begin`` and kind
            conflict diagnostics.

    Returns:
        Occurrences ordered by their ``\\begin`` offset.
    """
    log = log if log is not None else DiagnosticLog()
    stacks: dict[str, list[tuple[int, int, str | None]]] = {}
    found: list[EnvOccurrence] = []
    checked: set[str] = set()

    for match in _ENV_COMMAND.finditer(masked):
        name = match.group("name").strip()
        kind = config.classify(name)
        if kind is None:
            continue

        if match.group("cmd") == "begin":
            if name not in checked:
                checked.add(name)
                clash = config.conflicts(name)
                if clash:
                    kinds = ", ".join(k.value for k in clash)
                    log.error(
                        f"environment '{name}' matches several kinds ({kinds}); using {clash[0].value}",
                        offset=match.start(),
                    )
            title, body_start, unclosed_at = _read_title(masked, match.end())
            if unclosed_at is not None:
                log.warning(
                    f"unclosed optional argument of \\begin{{{name}}}; no title read",
                    offset=unclosed_at,
                )
            stacks.setdefault(name, []).append((match.start(), body_start, title))
            continue

        stack = stacks.get(name)
        if not stack:
            log.error(f"\\end{{{name}}} without matching \\begin{{{name}}}", offset=match.start())
            continue
        begin, body_start, title = stack.pop()
        found.append(
            EnvOccurrence(
                env_name=name,
                kind=kind,
                span=Span(begin, match.end()),
                body_span=Span(body_start, match.start()),
                chapter=chapter_at(chapters, begin),
                title=title,
            )
        )

    for name, stack in stacks.items():
        for begin, _, _ in stack:
            log.error(f"\\begin{{{name}}} is never closed; environment ignored", offset=begin)

    found.sort(key=lambda occ: occ.span.start)
    occurrences = _attach_nesting(found)
    logger.debug("Scanned %d environments", len(occurrences))
    return occurrences


def _attach_nesting(occurrences: list[EnvOccurrence]) -> list[EnvOccurrence]:
    """Record each occurrence's directly nested scanned environments."""
    children: dict[int, list[Span]] = {}
    open_stack: list[int] = []
    for index, occ in enumerate(occurrences):
        while open_stack and occurrences[open_stack[-1]].span.end <= occ.span.start:
            open_stack.pop()
        if open_stack:
            parent = occurrences[open_stack[-1]]
            if parent.body_span.contains(occ.span):
                children.setdefault(open_stack[-1], []).append(occ.span)
        open_stack.append(index)
    return [
        replace(occ, nested=tuple(children[i])) if i in children else occ
        for i, occ in enumerate(occurrences)
    ]
