"""Atomic output writes."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from knowtex.exceptions import RenderError


def write_atomic(path: Path, text: str, *, format: str) -> None:
    """Write ``text`` to ``path`` via a temporary file in the same directory.

    The target is replaced with ``os.replace``, so readers see either the old
    file or the complete new one.

    Raises:
        RenderError: If the file cannot be written.
    """
    directory = path.parent if str(path.parent) else Path(".")
    try:
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    except OSError as e:
        raise RenderError(f"Cannot write {path}: {e.strerror}", format=format) from e
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp_name, path)
    except OSError as e:
        Path(tmp_name).unlink(missing_ok=True)
        raise RenderError(f"Cannot write {path}: {e.strerror}", format=format) from e
