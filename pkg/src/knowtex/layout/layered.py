"""
Layered (Sugiyama-style) layout for dependency graphs.

Four passes, all deterministic:

1. Cycle breaking: DFS back-edges are reversed for layout purposes only.
2. Ranking: longest path from any source; sources sit on rank 0 (top row).
3. Ordering: lexicographic start, then 8 alternating median sweeps. The
   ordering with the fewest crossings seen (initial one included) is kept.
4. Coordinates: each weakly connected component is packed on its own and
   components are placed side by side, left to right by smallest node id.

All distances are in PostScript points (TikZ ``bp``).
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from statistics import median

import networkx as nx

from knowtex.graph.model import DepGraph
from knowtex.render.style import NodeShape, StyleConfig

logger = logging.getLogger(__name__)

MIN_NODE_WIDTH = 40.0
CHAR_WIDTH = 8.0
NODE_HEIGHT = 36.0
H_GAP = 24.0
RANK_SEP = 72.0
SWEEPS = 8

Point = tuple[float, float]
EdgePair = tuple[str, str]


@dataclass(frozen=True)
class LayeredLayout:
    """Coordinates for every node and a straight route for every edge.

    Attributes:
        rank: node id -> layer (0 = top)
        order: node id -> position within its layer
        position: node id -> (x, y) of the node centre
        size: node id -> (width, height) estimate
        routes: (source, target) -> polyline from border to border. Borders
            come from the size estimate; the TikZ emitter draws between node
            names instead so TikZ clips at the rendered shape. Routes serve
            consumers that need explicit edge geometry.
        reversed_edges: edges reversed while ranking (cycle members)
    """

    rank: Mapping[str, int]
    order: Mapping[str, int]
    position: Mapping[str, Point]
    size: Mapping[str, Point] = field(default_factory=dict)
    routes: Mapping[EdgePair, tuple[Point, ...]] = field(default_factory=dict)
    reversed_edges: frozenset[EdgePair] = frozenset()

    @property
    def node_ids(self) -> set[str]:
        return set(self.position)


def break_cycles(graph: DepGraph) -> tuple[list[EdgePair], frozenset[EdgePair]]:
    """Orient edges so they form a DAG.

    Runs an iterative DFS over nodes and successors in lexicographic order and
    flips every back edge.

    Returns:
        (oriented edge list, set of original edges that were flipped)
    """
    successors: dict[str, list[str]] = defaultdict(list)
    for edge in graph.edges:
        successors[edge.source].append(edge.target)
    for targets in successors.values():
        targets.sort()

    on_stack: set[str] = set()
    visited: set[str] = set()
    back: set[EdgePair] = set()

    for root in sorted(graph.nodes):
        if root in visited:
            continue
        visited.add(root)
        on_stack.add(root)
        stack = [(root, iter(successors[root]))]
        while stack:
            node, children = stack[-1]
            advanced = False
            for child in children:
                if child in on_stack:
                    back.add((node, child))
                elif child not in visited:
                    visited.add(child)
                    on_stack.add(child)
                    stack.append((child, iter(successors[child])))
                    advanced = True
                    break
            if not advanced:
                on_stack.discard(node)
                stack.pop()

    oriented = [
        (e.target, e.source) if (e.source, e.target) in back else (e.source, e.target)
        for e in graph.edges
    ]
    return oriented, frozenset(back)


def assign_ranks(graph: DepGraph) -> dict[str, int]:
    """Longest-path layering; rank(v) is the longest path from a source to v."""
    oriented, _ = break_cycles(graph)
    dag = nx.DiGraph()
    dag.add_nodes_from(graph.nodes)
    dag.add_edges_from(oriented)

    rank: dict[str, int] = {}
    for node in nx.lexicographical_topological_sort(dag):
        rank[node] = max((rank[p] + 1 for p in dag.predecessors(node)), default=0)
    return rank


def _layers(rank: Mapping[str, int]) -> dict[int, list[str]]:
    layers: dict[int, list[str]] = defaultdict(list)
    for node in sorted(rank):
        layers[rank[node]].append(node)
    return dict(layers)


def count_crossings(edges: Iterable[EdgePair], rank: Mapping[str, int], order: Mapping[str, int]) -> int:
    """Crossings among edges that join the same pair of ranks."""
    groups: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    for u, v in edges:
        if rank[u] == rank[v]:
            continue
        if rank[u] > rank[v]:
            u, v = v, u
        groups[(rank[u], rank[v])].append((order[u], order[v]))

    crossings = 0
    for ends in groups.values():
        for i, (a1, b1) in enumerate(ends):
            for a2, b2 in ends[i + 1 :]:
                if (a1 - a2) * (b1 - b2) < 0:
                    crossings += 1
    return crossings


def order_within_ranks(graph: DepGraph, rank: Mapping[str, int]) -> dict[str, int]:
    """Median-heuristic ordering within each rank.

    Down sweeps place each node at the median position of its neighbours in
    lower ranks, up sweeps of its neighbours in higher ranks. A node without
    such neighbours keeps its current position. Ties go to the smaller id.
    """
    layers = _layers(rank)
    if not layers:
        return {}

    pairs = [(e.source, e.target) for e in graph.edges]
    neighbours: dict[str, set[str]] = defaultdict(set)
    for u, v in pairs:
        neighbours[u].add(v)
        neighbours[v].add(u)

    def as_order(current: Mapping[int, list[str]]) -> dict[str, int]:
        return {node: i for row in current.values() for i, node in enumerate(row)}

    order = as_order(layers)
    best = dict(order)
    best_crossings = count_crossings(pairs, rank, best)
    ranks = sorted(layers)

    for sweep in range(SWEEPS):
        downward = sweep % 2 == 0
        sequence = ranks[1:] if downward else list(reversed(ranks[:-1]))
        for r in sequence:
            keys: dict[str, float] = {}
            for node in layers[r]:
                adjacent = [
                    order[n]
                    for n in neighbours[node]
                    if (rank[n] < r if downward else rank[n] > r)
                ]
                keys[node] = median(adjacent) if adjacent else order[node]
            layers[r] = sorted(layers[r], key=lambda n: (keys[n], n))
            for i, node in enumerate(layers[r]):
                order[node] = i

        crossings = count_crossings(pairs, rank, order)
        if crossings < best_crossings:
            best, best_crossings = dict(order), crossings

    logger.debug("Ordering across %d ranks has %d crossings", len(layers), best_crossings)
    return best


def node_size(display: str) -> Point:
    return max(MIN_NODE_WIDTH, CHAR_WIDTH * len(display)), NODE_HEIGHT


def _border_point(centre: Point, size: Point, shape: NodeShape, toward: Point) -> Point:
    """Where the ray from ``centre`` to ``toward`` leaves the node outline."""
    dx, dy = toward[0] - centre[0], toward[1] - centre[1]
    if dx == 0 and dy == 0:
        return centre
    hw, hh = size[0] / 2, size[1] / 2
    if shape is NodeShape.ELLIPSE:
        t = 1 / math.sqrt((dx / hw) ** 2 + (dy / hh) ** 2)
    elif shape is NodeShape.DIAMOND:
        t = 1 / (abs(dx) / hw + abs(dy) / hh)
    else:
        t = min(hw / abs(dx) if dx else math.inf, hh / abs(dy) if dy else math.inf)
    return centre[0] + t * dx, centre[1] + t * dy


def assign_coordinates(
    graph: DepGraph,
    rank: Mapping[str, int],
    order: Mapping[str, int],
    style: StyleConfig,
) -> LayeredLayout:
    """Place nodes and route edges.

    Rows are packed left to right with a 24 point gap and centred on the
    widest row of their component. y = (max_rank - rank) * 72, so rank 0 is
    drawn highest.
    """
    size = {node_id: node_size(node.display) for node_id, node in graph.nodes.items()}
    max_rank = max(rank.values(), default=0)

    undirected = nx.Graph()
    undirected.add_nodes_from(graph.nodes)
    undirected.add_edges_from((e.source, e.target) for e in graph.edges)
    components = sorted((sorted(c) for c in nx.connected_components(undirected)), key=lambda c: c[0])

    position: dict[str, Point] = {}
    offset = 0.0
    for component in components:
        rows: dict[int, list[str]] = defaultdict(list)
        for node in component:
            rows[rank[node]].append(node)
        widths = {
            r: sum(size[n][0] for n in row) + H_GAP * (len(row) - 1) for r, row in rows.items()
        }
        component_width = max(widths.values())
        for r, row in rows.items():
            cursor = offset + (component_width - widths[r]) / 2
            for node in sorted(row, key=lambda n: order[n]):
                width = size[node][0]
                position[node] = (cursor + width / 2, (max_rank - r) * RANK_SEP)
                cursor += width + H_GAP
        offset += component_width + H_GAP

    routes: dict[EdgePair, tuple[Point, ...]] = {}
    for edge in graph.edges:
        src, dst = position[edge.source], position[edge.target]
        src_shape = style.node_style(graph.nodes[edge.source]).shape
        dst_shape = style.node_style(graph.nodes[edge.target]).shape
        routes[(edge.source, edge.target)] = (
            _border_point(src, size[edge.source], src_shape, dst),
            _border_point(dst, size[edge.target], dst_shape, src),
        )

    _, reversed_edges = break_cycles(graph)
    return LayeredLayout(
        rank=dict(rank),
        order=dict(order),
        position=position,
        size=size,
        routes=routes,
        reversed_edges=reversed_edges,
    )


def layered_layout(graph: DepGraph, style: StyleConfig) -> LayeredLayout:
    """Rank, order and place ``graph`` in one call."""
    rank = assign_ranks(graph)
    order = order_within_ranks(graph, rank)
    layout = assign_coordinates(graph, rank, order, style)
    logger.debug(
        "Laid out %d nodes on %d ranks (%d edges reversed)",
        len(layout.position),
        max(rank.values(), default=-1) + 1,
        len(layout.reversed_edges),
    )
    return layout
