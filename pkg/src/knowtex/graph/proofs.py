"""
Proof association.

A proof is bound to the statement named by its ``\\proves`` command, or by
default to the nearest preceding labeled statement in the same chapter that
has no proof yet and is not a definition.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from knowtex.diagnostics import DiagnosticLog
from knowtex.kinds import NodeKind
from knowtex.scanner.environments import EnvOccurrence

logger = logging.getLogger(__name__)

# Kinds that normally carry a proof; a Remark/Example sitting between one of
# these and its proof makes the default binding ambiguous.
PROOF_BEARING_KINDS = frozenset(
    {
        NodeKind.THEOREM,
        NodeKind.LEMMA,
        NodeKind.PROPOSITION,
        NodeKind.COROLLARY,
        NodeKind.CONSTRUCTION,
    }
)
INCIDENTAL_KINDS = frozenset({NodeKind.REMARK, NodeKind.EXAMPLE})


@dataclass(frozen=True)
class ProofBinding:
    """A proof environment bound to the statement it proves."""

    statement: EnvOccurrence
    proof: EnvOccurrence


def _eligible(occ: EnvOccurrence, bound: set[int]) -> bool:
    return (
        not occ.is_proof
        and occ.label is not None
        and occ.kind is not NodeKind.DEFINITION
        and occ.span.start not in bound
    )


def associate_proofs(
    occurrences: list[EnvOccurrence],
    log: DiagnosticLog | None = None,
) -> list[ProofBinding]:
    """Bind proofs to statements.

    Args:
        occurrences: Annotated occurrences in document order.
        log: Receives unknown-target, orphan, duplicate-proof and ambiguity
            diagnostics.

    Returns:
        Bindings in proof order. A statement is bound at most once.
    """
    log = log if log is not None else DiagnosticLog()
    by_label: dict[str, EnvOccurrence] = {}
    for occ in occurrences:
        if not occ.is_proof and occ.label is not None:
            by_label.setdefault(occ.label, occ)

    bound: set[int] = set()
    bindings: list[ProofBinding] = []

    for index, proof in enumerate(occurrences):
        if not proof.is_proof:
            continue

        if proof.proves is not None:
            target = by_label.get(proof.proves)
            if target is None:
                log.warning(
                    f"\\proves{{{proof.proves}}} does not name a known statement; proof left unbound",
                    offset=proof.proves_at if proof.proves_at is not None else proof.offset,
                )
                continue
        else:
            found = _nearest_statement(occurrences, index, bound, log)
            if found is None:
                log.warning(
                    "orphan proof: no preceding statement to attach it to; its \\uses are ignored",
                    offset=proof.offset,
                )
                continue
            target = found

        if target.span.start in bound:
            log.warning(
                f"'{target.label}' already has a proof; this proof is ignored",
                offset=proof.offset,
            )
            continue
        bound.add(target.span.start)
        bindings.append(ProofBinding(statement=target, proof=proof))

    logger.debug("Bound %d proofs", len(bindings))
    return bindings


def _nearest_statement(
    occurrences: list[EnvOccurrence],
    proof_index: int,
    bound: set[int],
    log: DiagnosticLog,
) -> EnvOccurrence | None:
    proof = occurrences[proof_index]
    candidates = [
        occ
        for occ in reversed(occurrences[:proof_index])
        if occ.chapter == proof.chapter and _eligible(occ, bound)
    ]
    if not candidates:
        return None
    nearest = candidates[0]
    if nearest.kind in INCIDENTAL_KINDS:
        skipped = next((c for c in candidates[1:] if c.kind in PROOF_BEARING_KINDS), None)
        if skipped is not None:
            log.warning(
                f"proof attached to {nearest.kind.value} '{nearest.label}', not to "
                f"{skipped.kind.value} '{skipped.label}'; add \\proves to disambiguate",
                offset=proof.offset,
            )
    return nearest
