"""
Node and edge styling.

Default styles: definitions are purple boxes on lavender, constructions white
diamonds, propositions blue diamonds, lemmas and theorems blue ellipses,
corollaries white ellipses. Conceptual edges are dashed, logical edges solid.

Style files are JSON:

    {
      "nodes": {"definition": {"shape": "box", "color": "Purple", "fill": "White"}},
      "edges": {"conceptual": {"style": "solid"}},
      "phantom": {"color": "Red"},
      "arrowhead": "stealth"
    }

Every entry is optional; missing entries fall back to ``default_style()``.
Color names must be valid both for xcolor (dvipsnames or base) and for
Graphviz, since DOT and HTML pass them through unchanged.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Annotated, Any

from pydantic import AfterValidator, BaseModel, ConfigDict, ValidationError

from knowtex.exceptions import StyleError
from knowtex.graph.model import StatementNode
from knowtex.kinds import EdgeKind, NodeKind

logger = logging.getLogger(__name__)

# dvipsnames (xcolor) plus the xcolor base colors.
DVIPS_COLORS = frozenset(
    """
    Apricot Aquamarine Bittersweet Black Blue BlueGreen BlueViolet BrickRed Brown
    BurntOrange CadetBlue CarnationPink Cerulean CornflowerBlue Cyan Dandelion
    DarkOrchid Emerald ForestGreen Fuchsia Goldenrod Gray Green GreenYellow
    JungleGreen Lavender LimeGreen Magenta Mahogany Maroon Melon MidnightBlue
    Mulberry NavyBlue OliveGreen Orange OrangeRed Orchid Peach Periwinkle PineGreen
    Plum ProcessBlue Purple RawSienna Red RedOrange RedViolet Rhodamine RoyalBlue
    RoyalPurple RubineRed Salmon SeaGreen Sepia SkyBlue SpringGreen Tan TealBlue
    Thistle Turquoise Violet VioletRed White WildStrawberry Yellow YellowGreen
    YellowOrange
    """.split()
)
BASE_COLORS = frozenset(
    """
    black blue brown cyan darkgray gray green lightgray lime magenta olive orange
    pink purple red teal violet white yellow
    """.split()
)
# Graphviz X11 names (matched case-insensitively) that also appear above.
GRAPHVIZ_COLORS = frozenset(
    """
    aquamarine black blue blueviolet brown cadetblue cornflowerblue cyan darkorchid
    forestgreen goldenrod gray green greenyellow lavender lightgray limegreen magenta
    maroon midnightblue navyblue orange orangered orchid pink plum purple red
    royalblue salmon seagreen skyblue springgreen tan thistle turquoise violet
    violetred white yellow yellowgreen
    """.split()
)
LATEX_COLORS = DVIPS_COLORS | BASE_COLORS
KNOWN_COLORS = frozenset(c for c in LATEX_COLORS if c.lower() in GRAPHVIZ_COLORS)


class NodeShape(str, Enum):
    BOX = "box"
    ELLIPSE = "ellipse"
    DIAMOND = "diamond"

    @property
    def tikz(self) -> str:
        return {"box": "rectangle", "ellipse": "ellipse", "diamond": "diamond"}[self.value]


class LineStyle(str, Enum):
    SOLID = "solid"
    DASHED = "dashed"


@dataclass(frozen=True)
class NodeStyle:
    shape: NodeShape
    color: str
    fill: str


@dataclass(frozen=True)
class EdgeStyle:
    line: LineStyle


@dataclass(frozen=True)
class StyleConfig:
    """Complete style table.

    Attributes:
        nodes: Style per node kind (always complete)
        edges: Line style per edge kind (always complete)
        phantom: Style for phantom nodes
        arrowhead: TikZ arrow tip name
    """

    nodes: Mapping[NodeKind, NodeStyle]
    edges: Mapping[EdgeKind, EdgeStyle]
    phantom: NodeStyle
    arrowhead: str = "stealth"

    def node_style(self, node: StatementNode) -> NodeStyle:
        if node.phantom or node.kind is None:
            return self.phantom
        return self.nodes[node.kind]

    def is_dashed(self, kind: EdgeKind) -> bool:
        return self.edges[kind].line is LineStyle.DASHED


def default_style() -> StyleConfig:
    """The built-in style table."""
    box, ellipse, diamond = NodeShape.BOX, NodeShape.ELLIPSE, NodeShape.DIAMOND
    return StyleConfig(
        nodes={
            NodeKind.DEFINITION: NodeStyle(box, "Purple", "Lavender"),
            NodeKind.THEOREM: NodeStyle(ellipse, "Blue", "SkyBlue"),
            NodeKind.LEMMA: NodeStyle(ellipse, "Blue", "SkyBlue"),
            NodeKind.PROPOSITION: NodeStyle(diamond, "Blue", "SkyBlue"),
            NodeKind.COROLLARY: NodeStyle(ellipse, "Blue", "White"),
            NodeKind.CONSTRUCTION: NodeStyle(diamond, "Blue", "White"),
            NodeKind.EXAMPLE: NodeStyle(ellipse, "Gray", "White"),
            NodeKind.REMARK: NodeStyle(box, "Gray", "White"),
        },
        edges={
            EdgeKind.CONCEPTUAL: EdgeStyle(LineStyle.DASHED),
            EdgeKind.LOGICAL: EdgeStyle(LineStyle.SOLID),
        },
        phantom=NodeStyle(ellipse, "Red", "White"),
        arrowhead="stealth",
    )


def _check_color(value: str) -> str:
    if value in KNOWN_COLORS:
        return value
    if value in LATEX_COLORS:
        raise ValueError(f"color name '{value}' is not available in Graphviz")
    raise ValueError(f"unknown color name '{value}'")


ColorName = Annotated[str, AfterValidator(_check_color)]


class _NodeOverride(BaseModel):
    model_config = ConfigDict(extra="forbid")

    shape: NodeShape | None = None
    color: ColorName | None = None
    fill: ColorName | None = None

    def apply(self, base: NodeStyle) -> NodeStyle:
        return replace(
            base,
            shape=self.shape or base.shape,
            color=self.color or base.color,
            fill=self.fill or base.fill,
        )


class _EdgeOverride(BaseModel):
    model_config = ConfigDict(extra="forbid")

    style: LineStyle | None = None


class _StyleFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    nodes: dict[NodeKind, _NodeOverride] = {}
    edges: dict[EdgeKind, _EdgeOverride] = {}
    phantom: _NodeOverride | None = None
    arrowhead: str | None = None


def _key_path(loc: tuple[int | str, ...]) -> str:
    parts = [str(p) for p in loc if p != "[key]"]
    return ".".join(parts) or "<root>"


def parse_style(data: Any) -> StyleConfig:
    """Validate a decoded style document and merge it over the defaults.

    Raises:
        StyleError: With the dotted key path of the first offending entry.
    """
    try:
        overrides = _StyleFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        path = _key_path(tuple(first["loc"]))
        raise StyleError(f"Invalid style at '{path}': {first['msg']}", key_path=path) from None

    base = default_style()
    nodes = dict(base.nodes)
    for kind, override in overrides.nodes.items():
        nodes[kind] = override.apply(nodes[kind])
    edges = dict(base.edges)
    for edge_kind, edge_override in overrides.edges.items():
        if edge_override.style is not None:
            edges[edge_kind] = EdgeStyle(edge_override.style)
    phantom = overrides.phantom.apply(base.phantom) if overrides.phantom else base.phantom
    return StyleConfig(
        nodes=nodes,
        edges=edges,
        phantom=phantom,
        arrowhead=overrides.arrowhead or base.arrowhead,
    )


def load_style(path: Path | str) -> StyleConfig:
    """Read a JSON style file.

    Raises:
        StyleError: If the file is unreadable, not JSON, or has invalid entries.
    """
    style_path = Path(path)
    try:
        text = style_path.read_text(encoding="utf-8")
    except OSError as e:
        raise StyleError(f"Cannot read style file {style_path}: {e.strerror}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise StyleError(
            f"Malformed JSON in style file {style_path}: {e.msg} at line {e.lineno} column {e.colno}"
        ) from e
    logger.debug("Loaded style overrides from %s", style_path)
    return parse_style(data)
