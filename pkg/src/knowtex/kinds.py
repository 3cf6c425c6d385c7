"""Kind enumerations shared by the scanner, graph and renderers."""

from __future__ import annotations

from enum import Enum


class NodeKind(str, Enum):
    """Statement environment kinds that become graph nodes."""

    DEFINITION = "definition"
    THEOREM = "theorem"
    LEMMA = "lemma"
    PROPOSITION = "proposition"
    COROLLARY = "corollary"
    CONSTRUCTION = "construction"
    EXAMPLE = "example"
    REMARK = "remark"

    @classmethod
    def parse(cls, value: str) -> NodeKind:
        """Look up a kind by name, case-insensitively.

        Raises:
            ValueError: If no kind has that name.
        """
        try:
            return cls(value.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"Unknown kind '{value}'. Valid: {valid}") from None


class ProofKind(str, Enum):
    """Marker kind for proof environments."""

    PROOF = "proof"


class EdgeKind(str, Enum):
    """Dependency type of an edge: conceptual (statement) or logical (proof)."""

    CONCEPTUAL = "conceptual"
    LOGICAL = "logical"


class UnresolvedPolicy(str, Enum):
    """What to do with a \\uses target that names no statement in scope."""

    DROP = "drop"
    PHANTOM = "phantom"
