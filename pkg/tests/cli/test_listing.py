"""Tests for --list-chapters and --list-envs."""

import pytest

RING_ENVS = [
    "definition\tdef:ring\t1",
    "lemma\tlem:ring-unit\t5",
    "proof\t(unlabeled)\t10\tproves=lem:ring-unit",
    "corollary\tcor:trivial-ring\t14",
    "proof\t(unlabeled)\t19\tproves=cor:trivial-ring",
]


@pytest.mark.cli
class TestListChapters:
    def test_two_chapters(self, runner, app, two_chapters_tex):
        result = runner.invoke(app, [str(two_chapters_tex), "-q", "--list-chapters"])
        assert result.exit_code == 0
        assert result.stdout == "0\tGroups\n1\tHomomorphisms\n"

    def test_document_without_chapters(self, runner, app, ring_tex):
        result = runner.invoke(app, [str(ring_tex), "-q", "--list-chapters"])
        assert result.stdout == "0\t\n"


@pytest.mark.cli
class TestListEnvs:
    def test_ring_example(self, runner, app, ring_tex):
        result = runner.invoke(app, [str(ring_tex), "-q", "--list-envs"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == RING_ENVS

    def test_selected_chapter_only(self, runner, app, two_chapters_tex):
        result = runner.invoke(
            app, [str(two_chapters_tex), "-q", "--chapter", "1", "--policy", "phantom", "--list-envs"]
        )
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "lemma\tlem:identity\t32",
            "proof\t(unlabeled)\t37\tproves=lem:identity",
            "proposition\tprop:kernel\t41",
            "proof\t(unlabeled)\t46\tproves=prop:kernel",
            "theorem\tthm:first-iso\t51",
            "proof\t(unlabeled)\t56\tproves=thm:first-iso",
            "corollary\tcor:quotient\t61",
        ]

    def test_both_listings(self, runner, app, ring_tex):
        result = runner.invoke(app, [str(ring_tex), "-q", "--list-chapters", "--list-envs"])
        assert result.stdout.splitlines() == ["0\t", *RING_ENVS]

    def test_empty_file_lists_nothing(self, runner, app, write_tex):
        result = runner.invoke(app, [str(write_tex("")), "--list-envs"])
        assert result.exit_code == 0
        assert result.stdout == ""
