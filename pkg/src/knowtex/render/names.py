"""Node-name sanitization shared by the DOT and TikZ emitters."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Mapping

from knowtex.diagnostics import DiagnosticLog
from knowtex.graph.model import StatementNode

logger = logging.getLogger(__name__)

_UNSAFE = re.compile(r"[^A-Za-z0-9_]")


def sanitize(label: str) -> str:
    """Replace every character outside [A-Za-z0-9_] with '_' ("lem:ring-unit" -> "lem_ring_unit")."""
    return _UNSAFE.sub("_", label) or "_"


def node_names(
    ids: Mapping[str, StatementNode] | Iterable[str],
    log: DiagnosticLog | None = None,
) -> dict[str, str]:
    """Map node ids to unique emitter names.

    Ids are processed in lexicographic order. When a sanitized name is already
    taken, the later id gets the first free ``_2``, ``_3``, ... suffix and a
    warning is logged. Given a node mapping, the warning points at the
    renamed node's source position.
    """
    nodes = ids if isinstance(ids, Mapping) else {}
    names: dict[str, str] = {}
    taken: set[str] = set()
    for node_id in sorted(ids):
        base = sanitize(node_id)
        name = base
        suffix = 2
        while name in taken:
            name = f"{base}_{suffix}"
            suffix += 1
        if name != base:
            message = f"labels collide after sanitizing: '{node_id}' is emitted as '{name}'"
            logger.warning(message)
            if log is not None:
                node = nodes.get(node_id)
                log.warning(message, offset=node.offset if node is not None else None)
        names[node_id] = name
        taken.add(name)
    return names
