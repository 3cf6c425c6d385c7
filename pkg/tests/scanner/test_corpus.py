"""Scanner checks against randomly generated documents with known contents."""

import pytest

from knowtex.diagnostics import DiagnosticLog
from knowtex.scanner import EnvironmentConfig, SourceDocument
from knowtex.pipeline import scan_document
from tests.support.factories import DocumentFactory
from tests.support.helpers import make_rng

CORPUS_SIZE = 500


def _corpus():
    rng = make_rng(stream=7)
    for _ in range(CORPUS_SIZE):
        yield DocumentFactory(rng, max_depth=2).build()


@pytest.mark.property
@pytest.mark.scanner
@pytest.mark.slow
class TestGeneratedCorpus:
    """Every planted environment is found exactly, and no decoy is."""

    def test_environments_match_ground_truth(self):
        for number, (text, planted) in enumerate(_corpus()):
            log = DiagnosticLog()
            _, occurrences = scan_document(SourceDocument("gen.tex", text), EnvironmentConfig.default(), log)

            found = [
                (occ.env_name, occ.kind, occ.span.start, occ.span.end, occ.label, occ.uses, occ.title)
                for occ in occurrences
            ]
            expected = [(p.name, p.kind, p.start, p.end, p.label, p.uses, p.title) for p in planted]
            assert found == expected, f"document {number} differs:\n{text}"
            assert len(log) == 0, f"document {number}: {[d.message for d in log]}"

    def test_no_decoy_labels_leak(self):
        for text, _ in _corpus():
            _, occurrences = scan_document(
                SourceDocument("gen.tex", text), EnvironmentConfig.default(), DiagnosticLog()
            )
            for occ in occurrences:
                assert not any(item.startswith("decoy:") for item in occ.uses)
                assert occ.label is None or not occ.label.startswith("decoy:")

    def test_uses_offsets_point_at_uses_commands(self):
        for text, _ in _corpus():
            _, occurrences = scan_document(
                SourceDocument("gen.tex", text), EnvironmentConfig.default(), DiagnosticLog()
            )
            for occ in occurrences:
                assert len(occ.uses_at) == len(occ.uses)
                for at in occ.uses_at:
                    assert text.startswith("\\uses{", at)
                    assert occ.body_span.start <= at < occ.body_span.end
