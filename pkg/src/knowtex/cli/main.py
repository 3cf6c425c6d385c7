"""
Command-line interface for knowtex.

    knowtex INPUT.tex [--chapter N|TITLE] [--env PATTERN=KIND]... [--kind KIND]...
                      [--policy drop|phantom] [--no-reduce] [--strict]
                      [--style FILE.json] [--out-dot FILE] [--out-tikz FILE]
                      [--out-html FILE] [--tikz-standalone]
                      [--list-chapters] [--list-envs]

Diagnostics go to stderr as ``path:line:col: severity: message``; listings go
to stdout. Exit codes: 0 success, 1 diagnostics failure, 2 usage/IO failure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Annotated

import typer

from knowtex.cli.exit_codes import exit_with_exception, get_exit_code_for_diagnostics
from knowtex.cli.files import write_atomic
from knowtex.cli.formatters import (
    debug,
    info,
    print_diagnostics,
    set_quiet_mode,
    set_verbose_mode,
    success,
)
from knowtex.config import DEFAULT_HTML_SCRIPT_URL, ConfigManager
from knowtex.exceptions import KnowTexError, UsageError
from knowtex.graph import NodeKind, UnresolvedPolicy
from knowtex.layout import layered_layout
from knowtex.pipeline import Analysis, analyze
from knowtex.render import (
    StyleConfig,
    default_style,
    emit_dot,
    emit_html,
    emit_tikz,
    load_style,
)
from knowtex.scanner import EnvironmentConfig, SourceDocument

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="knowtex",
    help="Build dependency graphs of definitions, lemmas and theorems from LaTeX sources.",
    add_completion=False,
)


@dataclass
class RunConfig:
    """All user selections for one run.

    Attributes:
        input_path: LaTeX source file
        chapter: Chapter selector (index or exact title), None for all
        env_overrides: PATTERN=KIND tokens, lowest-priority layer first
        kinds: Kinds to scan (empty = all)
        policy: Unresolved-label policy
        reduce: Apply transitive reduction
        strict: Warnings fail the run
        style_path: Optional JSON style file
        out_dot / out_tikz / out_html: Output files
        tikz_standalone: Wrap TikZ output in a standalone document
        html_script_url: Client-side Graphviz renderer for the HTML page
        list_chapters / list_envs: Listing modes
    """

    input_path: Path
    chapter: str | None = None
    env_overrides: list[list[str]] = field(default_factory=list)
    kinds: list[str] = field(default_factory=list)
    policy: UnresolvedPolicy = UnresolvedPolicy.DROP
    reduce: bool = True
    strict: bool = False
    style_path: Path | None = None
    out_dot: Path | None = None
    out_tikz: Path | None = None
    out_html: Path | None = None
    tikz_standalone: bool = False
    html_script_url: str = DEFAULT_HTML_SCRIPT_URL
    list_chapters: bool = False
    list_envs: bool = False

    @property
    def has_outputs(self) -> bool:
        return any(p is not None for p in (self.out_dot, self.out_tikz, self.out_html))

    def validate(self) -> None:
        """Raises UsageError when there is nothing to do."""
        if not (self.has_outputs or self.list_chapters or self.list_envs):
            raise UsageError(
                "Nothing to do: give at least one of --out-dot, --out-tikz, --out-html, "
                "--list-chapters or --list-envs"
            )

    def environment_config(self) -> EnvironmentConfig:
        """Default table plus override layers, restricted to the selected kinds.

        Raises:
            UsageError: On a malformed override or unknown kind.
        """
        config = EnvironmentConfig.default()
        for layer in self.env_overrides:
            config = config.with_overrides(layer)
        kinds: list[NodeKind] = []
        for token in self.kinds:
            try:
                kinds.append(NodeKind.parse(token))
            except ValueError as e:
                raise UsageError(str(e), token=token) from None
        return config.restrict(kinds)


def build_run_config(
    input_path: Path,
    config: ConfigManager,
    *,
    chapter: str | None = None,
    env: list[str] | None = None,
    kind: list[str] | None = None,
    policy: UnresolvedPolicy | None = None,
    reduce: bool | None = None,
    strict: bool = False,
    style: Path | None = None,
    out_dot: Path | None = None,
    out_tikz: Path | None = None,
    out_html: Path | None = None,
    tikz_standalone: bool = False,
    list_chapters: bool = False,
    list_envs: bool = False,
) -> RunConfig:
    """Merge command-line values over the configuration file."""
    return RunConfig(
        input_path=input_path,
        chapter=chapter,
        env_overrides=[config.get_environment_overrides(), list(env or [])],
        kinds=list(kind) if kind else config.get_kinds(),
        policy=UnresolvedPolicy(config.get_policy(policy.value if policy else None)),
        reduce=config.is_reduce_enabled(reduce),
        strict=config.is_strict(True if strict else None),
        style_path=config.get_style_path(style),
        out_dot=out_dot,
        out_tikz=out_tikz,
        out_html=out_html,
        tikz_standalone=config.is_tikz_standalone(True if tikz_standalone else None),
        html_script_url=config.get_html_script_url(),
        list_chapters=list_chapters,
        list_envs=list_envs,
    )


def list_chapters(analysis: Analysis) -> None:
    """``index<TAB>title`` per chapter on stdout."""
    for chapter in analysis.chapters:
        typer.echo(f"{chapter.index}\t{chapter.title}")


def list_environments(analysis: Analysis) -> None:
    """``kind<TAB>label<TAB>line`` per scanned occurrence on stdout.

    Bound proofs get a fourth ``proves=<label>`` column.
    """
    proves = {b.proof.span.start: b.statement.label for b in analysis.bindings}
    for occ in analysis.selected_occurrences:
        line = analysis.document.line_of(occ.offset)
        row = f"{occ.kind.value}\t{occ.label or '(unlabeled)'}\t{line}"
        target = proves.get(occ.span.start)
        if target is not None:
            row += f"\tproves={target}"
        typer.echo(row)


def write_outputs(analysis: Analysis, config: RunConfig, style: StyleConfig) -> None:
    """Render and write every requested output.

    Raises:
        RenderError: If an emitter fails or a file cannot be written.
    """
    graph = analysis.graph

    if config.out_dot is not None:
        write_atomic(config.out_dot, emit_dot(graph, style), format="dot")
        debug(f"Wrote {config.out_dot}")
    if config.out_tikz is not None:
        layout = layered_layout(graph, style)
        text = emit_tikz(graph, layout, style, standalone=config.tikz_standalone)
        write_atomic(config.out_tikz, text, format="tikz")
        debug(f"Wrote {config.out_tikz}")
    if config.out_html is not None:
        html = emit_html(
            graph,
            style,
            title=Path(analysis.document.path).name,
            script_url=config.html_script_url,
        )
        write_atomic(config.out_html, html, format="html")
        debug(f"Wrote {config.out_html}")


def run(config: RunConfig) -> int:
    """Execute one run and return its exit code.

    Outputs are written even when diagnostics fail the run.

    Raises:
        KnowTexError: On usage, input, config, style or write problems.
    """
    config.validate()
    env_config = config.environment_config()
    style = load_style(config.style_path) if config.style_path else default_style()

    document = SourceDocument.from_path(config.input_path)
    analysis = analyze(
        document,
        env_config,
        chapter=config.chapter,
        policy=config.policy,
        reduce=config.reduce,
    )
    debug(f"{len(analysis.occurrences)} environments in {len(analysis.chapters)} chapters")

    if config.list_chapters:
        list_chapters(analysis)
    if config.list_envs:
        list_environments(analysis)
    if config.has_outputs:
        write_outputs(analysis, config, style)

    print_diagnostics(analysis.log.in_document_order(), document)
    code = get_exit_code_for_diagnostics(analysis.log, strict=config.strict)

    if config.has_outputs:
        summary = (
            f"{len(analysis.graph.nodes)} nodes, {len(analysis.graph.edges)} edges "
            f"({analysis.removed_edges} removed by transitive reduction)"
        )
        if code == 0:
            success(summary)
        else:
            info(f"{summary}; {len(analysis.log)} diagnostics")
    return code


def _version_callback(value: bool) -> None:
    if value:
        from knowtex import __version__

        typer.echo(f"knowtex {__version__}")
        raise typer.Exit()


@app.command()
def main_command(
    input_path: Annotated[
        Path,
        typer.Argument(metavar="INPUT.tex", help="LaTeX source file"),
    ],
    chapter: Annotated[
        str | None,
        typer.Option("--chapter", help="Only this chapter: 0-based index or exact title"),
    ] = None,
    env: Annotated[
        list[str] | None,
        typer.Option(
            "--env",
            metavar="PATTERN=KIND",
            help="Map environment names matching PATTERN (regex) to KIND; repeatable",
        ),
    ] = None,
    kind: Annotated[
        list[str] | None,
        typer.Option("--kind", help="Only scan these statement kinds; repeatable"),
    ] = None,
    policy: Annotated[
        UnresolvedPolicy | None,
        typer.Option("--policy", help="Unresolved \\uses targets: drop (default) or phantom"),
    ] = None,
    reduce: Annotated[
        bool | None,
        typer.Option("--reduce/--no-reduce", help="Remove edges implied by longer paths"),
    ] = None,
    strict: Annotated[
        bool,
        typer.Option("--strict", help="Exit 1 on warnings too"),
    ] = False,
    style: Annotated[
        Path | None,
        typer.Option("--style", metavar="FILE.json", help="JSON style overrides"),
    ] = None,
    out_dot: Annotated[
        Path | None,
        typer.Option("--out-dot", help="Write Graphviz DOT"),
    ] = None,
    out_tikz: Annotated[
        Path | None,
        typer.Option("--out-tikz", help="Write a TikZ picture"),
    ] = None,
    out_html: Annotated[
        Path | None,
        typer.Option("--out-html", help="Write a self-contained HTML preview"),
    ] = None,
    tikz_standalone: Annotated[
        bool,
        typer.Option("--tikz-standalone", help="Wrap TikZ output in a compilable document"),
    ] = False,
    show_chapters: Annotated[
        bool,
        typer.Option("--list-chapters", help="Print index<TAB>title per chapter"),
    ] = False,
    show_envs: Annotated[
        bool,
        typer.Option("--list-envs", help="Print kind<TAB>label<TAB>line per environment"),
    ] = False,
    config_path: Annotated[
        Path | None,
        typer.Option(
            "--config",
            "-C",
            help="Path to config file (default: ~/.knowtex/config.yaml)",
        ),
    ] = None,
    quiet: Annotated[
        bool,
        typer.Option("--quiet", "-q", help="Suppress the run summary (diagnostics still shown)"),
    ] = False,
    verbose: Annotated[
        bool,
        typer.Option("--verbose", "-v", help="Log pipeline stages and show tracebacks"),
    ] = False,
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            "-V",
            help="Show version and exit",
            callback=_version_callback,
            is_eager=True,
        ),
    ] = None,
) -> None:
    """Scan INPUT.tex and emit its dependency graph.

    Exit codes: 0=success, 1=diagnostics failure, 2=usage or I/O error
    """
    set_quiet_mode(quiet)
    set_verbose_mode(verbose)

    try:
        run_config = build_run_config(
            input_path,
            ConfigManager(config_path),
            chapter=chapter,
            env=env,
            kind=kind,
            policy=policy,
            reduce=reduce,
            strict=strict,
            style=style,
            out_dot=out_dot,
            out_tikz=out_tikz,
            out_html=out_html,
            tikz_standalone=tikz_standalone,
            list_chapters=show_chapters,
            list_envs=show_envs,
        )
        code = run(run_config)
    except KnowTexError as e:
        logger.debug("Run stopped", exc_info=True)
        exit_with_exception(e)
    if code != 0:
        raise typer.Exit(code=code)


def main() -> None:
    """Entry point for CLI."""
    app()

