class TestHelp:
    """Test help output."""

    def test_help_flag_exits_successfully(self, runner, app):
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0

    def test_help_shows_usage(self, runner, app):
        result = runner.invoke(app, ["--help"])
        assert "Usage:" in result.stdout
        assert "INPUT.tex" in result.stdout

    def test_help_lists_output_options(self, runner, app):
        result = runner.invoke(app, ["--help"])
        for option in ("--out-dot", "--out-tikz", "--out-html", "--list-chapters", "--list-envs"):
            assert option in result.stdout

    def test_missing_input_is_a_usage_error(self, runner, app):
        result = runner.invoke(app, [])
        assert result.exit_code == 2
