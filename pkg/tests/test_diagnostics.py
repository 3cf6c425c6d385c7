"""Tests for diagnostics and their formatting."""

from knowtex.diagnostics import Diagnostic, DiagnosticLog, Severity
from knowtex.scanner import SourceDocument


class TestDiagnosticLog:
    def test_severity_queries(self):
        log = DiagnosticLog()
        assert not log.has_errors()
        assert not log.has_warnings()
        log.warning("w", offset=3)
        assert log.has_warnings()
        assert not log.has_errors()
        log.error("e")
        assert log.has_errors()
        assert len(log) == 2

    def test_document_order_is_stable(self):
        log = DiagnosticLog()
        log.error("late", offset=50)
        log.warning("unpositioned")
        log.warning("early", offset=5)
        log.warning("also early", offset=5)
        assert [d.message for d in log.in_document_order()] == ["early", "also early", "late", "unpositioned"]
        assert [d.message for d in log] == ["late", "unpositioned", "early", "also early"]


class TestFormat:
    def test_positioned(self):
        document = SourceDocument("notes.tex", "ab\ncd\n")
        diagnostic = Diagnostic(Severity.ERROR, "broken", offset=4)
        assert diagnostic.format(document) == "notes.tex:2:2: error: broken"

    def test_unpositioned(self):
        document = SourceDocument("notes.tex", "")
        assert Diagnostic(Severity.WARNING, "odd").format(document) == "notes.tex: warning: odd"
