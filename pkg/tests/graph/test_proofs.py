"""Tests for proof association."""

import pytest

from knowtex.diagnostics import DiagnosticLog
from knowtex.graph import associate_proofs
from knowtex.pipeline import scan_document
from knowtex.scanner import EnvironmentConfig, SourceDocument


def bind(text: str, log: DiagnosticLog | None = None) -> dict[int, str]:
    """Proof line -> label of the statement it is bound to."""
    log = log if log is not None else DiagnosticLog()
    document = SourceDocument("doc.tex", text)
    _, occurrences = scan_document(document, EnvironmentConfig.default(), log)
    bindings = associate_proofs(occurrences, log)
    return {document.line_of(b.proof.offset): b.statement.label for b in bindings}


@pytest.mark.unit
@pytest.mark.graph
class TestDefaultBinding:
    """Nearest preceding eligible statement in the same chapter."""

    def test_ring_example(self, ring_document):
        assert bind(ring_document.text) == {10: "lem:ring-unit", 19: "cor:trivial-ring"}

    def test_definitions_never_receive_default_proofs(self):
        log = DiagnosticLog()
        text = "\\begin{definition}\\label{d}\\end{definition}\n\\begin{proof}\\end{proof}\n"
        assert bind(text, log) == {}
        assert [d.message for d in log] == [
            "orphan proof: no preceding statement to attach it to; its \\uses are ignored"
        ]

    def test_unlabeled_statements_are_skipped(self):
        text = (
            "\\begin{lemma}\\label{a}\\end{lemma}\n"
            "\\begin{lemma}unlabeled\\end{lemma}\n"
            "\\begin{proof}\\end{proof}\n"
        )
        assert bind(text) == {3: "a"}

    def test_bound_statements_are_skipped(self):
        text = (
            "\\begin{lemma}\\label{a}\\end{lemma}\n"
            "\\begin{lemma}\\label{b}\\end{lemma}\n"
            "\\begin{proof}\\end{proof}\n"
            "\\begin{proof}\\end{proof}\n"
        )
        assert bind(text) == {3: "b", 4: "a"}

    def test_proof_does_not_cross_chapter_boundary(self):
        log = DiagnosticLog()
        text = "\\chapter{A}\n\\begin{lemma}\\label{a}\\end{lemma}\n\\chapter{B}\n\\begin{proof}\\end{proof}\n"
        assert bind(text, log) == {}
        assert len(log) == 1
        assert log.entries[0].message.startswith("orphan proof")

    def test_incidental_statement_in_between_is_reported(self):
        log = DiagnosticLog()
        text = (
            "\\begin{theorem}\\label{thm:a}\\end{theorem}\n"
            "\\begin{remark}\\label{rem:b}\\end{remark}\n"
            "\\begin{proof}\\end{proof}\n"
        )
        assert bind(text, log) == {3: "rem:b"}
        assert [d.message for d in log] == [
            "proof attached to remark 'rem:b', not to theorem 'thm:a'; add \\proves to disambiguate"
        ]

    def test_unlabeled_remark_in_between_is_transparent(self):
        log = DiagnosticLog()
        text = (
            "\\begin{theorem}\\label{thm:a}\\end{theorem}\n"
            "\\begin{remark}no label\\end{remark}\n"
            "\\begin{proof}\\end{proof}\n"
        )
        assert bind(text, log) == {3: "thm:a"}
        assert len(log) == 0


@pytest.mark.unit
@pytest.mark.graph
class TestExplicitBinding:
    """\\proves overrides the default rule."""

    def test_proves_reaches_back_past_other_statements(self):
        text = (
            "\\begin{theorem}\\label{thm:a}\\end{theorem}\n"
            "\\begin{lemma}\\label{lem:b}\\end{lemma}\n"
            "\\begin{proof}\\proves{thm:a}\\end{proof}\n"
            "\\begin{proof}\\end{proof}\n"
        )
        assert bind(text) == {3: "thm:a", 4: "lem:b"}

    def test_proves_may_name_a_definition(self):
        text = "\\begin{definition}\\label{d}\\end{definition}\n\\begin{proof}\\proves{d}\\end{proof}\n"
        assert bind(text) == {2: "d"}

    def test_proves_may_point_forward(self):
        text = "\\begin{proof}\\proves{later}\\end{proof}\n\\begin{lemma}\\label{later}\\end{lemma}\n"
        assert bind(text) == {1: "later"}

    def test_unknown_target(self):
        log = DiagnosticLog()
        text = "\\begin{lemma}\\label{a}\\end{lemma}\n\\begin{proof}\\proves{zzz}\\end{proof}\n"
        assert bind(text, log) == {}
        assert [d.message for d in log] == [
            "\\proves{zzz} does not name a known statement; proof left unbound"
        ]

    def test_second_proof_of_same_statement(self):
        log = DiagnosticLog()
        text = (
            "\\begin{lemma}\\label{a}\\end{lemma}\n"
            "\\begin{proof}\\end{proof}\n"
            "\\begin{proof}\\proves{a}\\end{proof}\n"
        )
        assert bind(text, log) == {2: "a"}
        assert [d.message for d in log] == ["'a' already has a proof; this proof is ignored"]
