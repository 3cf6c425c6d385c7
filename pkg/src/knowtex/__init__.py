"""
knowtex: dependency graphs from annotated LaTeX sources.

Scan statement environments and their \\uses/\\proves annotations,
build the conceptual/logical dependency graph, reduce it, and render
it as DOT, TikZ and a self-contained HTML preview.
"""

__version__ = "0.1.0"
