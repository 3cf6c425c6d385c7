"""Tests for the layered layout."""

import pytest

from knowtex.graph import NodeKind
from knowtex.layout import (
    H_GAP,
    NODE_HEIGHT,
    RANK_SEP,
    assign_ranks,
    break_cycles,
    count_crossings,
    layered_layout,
    node_size,
    order_within_ranks,
)
from knowtex.render import default_style
from tests.support.factories import create_graph, random_dag, random_digraph
from tests.support.helpers import crossings, make_rng


@pytest.fixture
def style():
    return default_style()


@pytest.mark.unit
@pytest.mark.layout
class TestRanks:
    def test_chain(self):
        graph = create_graph([("a", "b"), ("b", "c")])
        assert assign_ranks(graph) == {"a": 0, "b": 1, "c": 2}

    def test_longest_path_wins(self):
        graph = create_graph([("a", "b"), ("b", "c"), ("a", "c")])
        assert assign_ranks(graph)["c"] == 2

    def test_isolated_nodes_sit_on_top(self):
        graph = create_graph([("a", "b")], nodes=["z"])
        assert assign_ranks(graph)["z"] == 0

    def test_cycle_is_broken_deterministically(self):
        graph = create_graph([("a", "b"), ("b", "c"), ("c", "a")])
        oriented, flipped = break_cycles(graph)
        assert flipped == frozenset({("c", "a")})
        assert ("a", "c") in oriented
        assert assign_ranks(graph) == {"a": 0, "b": 1, "c": 2}

    def test_two_cycle(self):
        graph = create_graph([("a", "b"), ("b", "a")])
        _, flipped = break_cycles(graph)
        assert flipped == frozenset({("b", "a")})
        assert assign_ranks(graph) == {"a": 0, "b": 1}


@pytest.mark.unit
@pytest.mark.layout
class TestOrdering:
    def test_count_crossings(self):
        rank = {"a": 0, "b": 0, "c": 1, "d": 1}
        order = {"a": 0, "b": 1, "c": 0, "d": 1}
        assert count_crossings([("a", "d"), ("b", "c")], rank, order) == 1
        assert count_crossings([("a", "c"), ("b", "d")], rank, order) == 0

    def test_shared_endpoint_is_not_a_crossing(self):
        rank = {"a": 0, "b": 0, "c": 1}
        order = {"a": 0, "b": 1, "c": 0}
        assert count_crossings([("a", "c"), ("b", "c")], rank, order) == 0

    def test_sweeps_remove_a_crossing(self):
        graph = create_graph([("a", "d"), ("b", "c")])
        rank = assign_ranks(graph)
        order = order_within_ranks(graph, rank)
        assert order["a"] < order["b"]
        assert order["d"] < order["c"]
        assert count_crossings(graph.edge_pairs(), rank, order) == 0

    def test_orders_are_permutations(self):
        rng = make_rng(stream=3)
        for _ in range(50):
            graph = random_dag(rng, max_nodes=20, density=0.3)
            rank = assign_ranks(graph)
            order = order_within_ranks(graph, rank)
            for r in set(rank.values()):
                row = sorted(order[n] for n in rank if rank[n] == r)
                assert row == list(range(len(row)))

    def test_never_worse_than_lexicographic_start(self):
        rng = make_rng(stream=4)
        for _ in range(100):
            graph = random_dag(rng, max_nodes=20, density=0.3)
            rank = assign_ranks(graph)
            start = {}
            for r in set(rank.values()):
                for i, node in enumerate(sorted(n for n in rank if rank[n] == r)):
                    start[node] = i
            order = order_within_ranks(graph, rank)
            edges = graph.edge_pairs()
            assert count_crossings(edges, rank, order) <= count_crossings(edges, rank, start)

    def test_count_matches_oracle(self):
        rng = make_rng(stream=5)
        for _ in range(100):
            graph = random_dag(rng, max_nodes=15, density=0.4)
            rank = assign_ranks(graph)
            order = order_within_ranks(graph, rank)
            assert count_crossings(graph.edge_pairs(), rank, order) == crossings(graph.edge_pairs(), rank, order)


@pytest.mark.unit
@pytest.mark.layout
class TestCoordinates:
    """Exact positions for small graphs."""

    def test_node_size(self):
        assert node_size("a") == (40.0, NODE_HEIGHT)
        assert node_size("trivial-ring") == (96.0, NODE_HEIGHT)

    def test_ring_example(self, ring_analysis, style):
        layout = layered_layout(ring_analysis.graph, style)
        assert layout.position == {
            "def:ring": (48.0, 144.0),
            "lem:ring-unit": (48.0, 72.0),
            "cor:trivial-ring": (48.0, 0.0),
        }
        assert layout.routes[("def:ring", "lem:ring-unit")] == ((48.0, 126.0), (48.0, 90.0))
        assert layout.reversed_edges == frozenset()

    def test_adjacent_ranks_are_one_separation_apart(self, ring_analysis, style):
        layout = layered_layout(ring_analysis.graph, style)
        ys = sorted(y for _, y in layout.position.values())
        assert [b - a for a, b in zip(ys, ys[1:])] == [RANK_SEP, RANK_SEP]

    def test_diamond(self, style):
        graph = create_graph([("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
        layout = layered_layout(graph, style)
        assert layout.position == {
            "a": (52.0, 144.0),
            "b": (20.0, 72.0),
            "c": (84.0, 72.0),
            "d": (52.0, 0.0),
        }

    def test_components_side_by_side(self, style):
        graph = create_graph([("b", "c")], nodes=["a"])
        layout = layered_layout(graph, style)
        assert layout.position["a"] == (20.0, 72.0)
        assert layout.position["b"] == (40.0 + H_GAP + 20.0, 72.0)
        assert layout.position["c"] == (40.0 + H_GAP + 20.0, 0.0)

    def test_empty_graph(self, style):
        layout = layered_layout(create_graph([]), style)
        assert layout.position == {}
        assert layout.routes == {}

    def test_route_is_clipped_to_box_border(self, style):
        graph = create_graph([("a", "b")], kinds={"a": NodeKind.DEFINITION})
        layout = layered_layout(graph, style)
        assert layout.routes[("a", "b")][0] == (20.0, 72.0 - NODE_HEIGHT / 2)


@pytest.mark.property
@pytest.mark.layout
class TestLayoutInvariants:
    """Properties that hold for any input graph."""

    def test_random_graphs(self, style):
        rng = make_rng(stream=9)
        for _ in range(100):
            graph = random_digraph(rng, max_nodes=25)
            layout = layered_layout(graph, style)

            assert layout.node_ids == set(graph.nodes)
            assert set(layout.routes) == graph.edge_pairs()
            max_rank = max(layout.rank.values(), default=0)
            for node, (_, y) in layout.position.items():
                assert y == (max_rank - layout.rank[node]) * RANK_SEP

            oriented, _ = break_cycles(graph)
            for u, v in oriented:
                assert layout.rank[u] < layout.rank[v]

            rows: dict[float, list[tuple[float, float]]] = {}
            for node, (x, y) in layout.position.items():
                rows.setdefault(y, []).append((x, layout.size[node][0]))
            for row in rows.values():
                row.sort()
                for (x1, w1), (x2, w2) in zip(row, row[1:]):
                    assert x2 - x1 >= (w1 + w2) / 2 + H_GAP - 1e-9

    def test_deterministic(self, style):
        rng = make_rng(stream=10)
        for _ in range(20):
            graph = random_digraph(rng, max_nodes=30)
            assert layered_layout(graph, style) == layered_layout(graph, style)
