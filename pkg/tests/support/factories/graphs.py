"""Dependency graph builders for algorithm tests."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator

from knowtex.graph.model import DepGraph, Edge, EdgeKind, NodeKind, StatementNode, display_name


def create_node(node_id: str, kind: NodeKind | None = NodeKind.LEMMA, **overrides: object) -> StatementNode:
    """StatementNode with sensible defaults."""
    defaults: dict[str, object] = {
        "id": node_id,
        "kind": kind,
        "chapter": 0,
        "display": display_name(node_id),
    }
    defaults.update(overrides)
    return StatementNode(**defaults)  # type: ignore[arg-type]


def create_graph(
    edges: Iterable[tuple[str, str] | tuple[str, str, EdgeKind]],
    nodes: Iterable[str] = (),
    kinds: dict[str, NodeKind] | None = None,
) -> DepGraph:
    """Graph from (source, target[, kind]) tuples; edges default to LOGICAL."""
    edge_list = []
    ids = set(nodes)
    for item in edges:
        source, target = item[0], item[1]
        kind = item[2] if len(item) == 3 else EdgeKind.LOGICAL  # type: ignore[misc]
        edge_list.append(Edge(source, target, kind))
        ids.update((source, target))
    kinds = kinds or {}
    return DepGraph.create(
        [create_node(i, kinds.get(i, NodeKind.LEMMA)) for i in ids],
        edge_list,
    )


def random_digraph(rng: random.Random, max_nodes: int = 50, density: float | None = None) -> DepGraph:
    """Random simple digraph (cycles allowed) with random edge kinds."""
    n = rng.randint(1, max_nodes)
    ids = [f"n:{i:02d}" for i in range(n)]
    p = density if density is not None else rng.uniform(0.0, min(1.0, 4.0 / n))
    edges = [
        Edge(u, v, rng.choice(list(EdgeKind)))
        for u, v in itertools.permutations(ids, 2)
        if rng.random() < p
    ]
    return DepGraph.create([create_node(i, rng.choice(list(NodeKind))) for i in ids], edges)


def random_dag(rng: random.Random, max_nodes: int = 30, density: float = 0.2) -> DepGraph:
    """Random DAG whose topological order is shuffled against id order."""
    n = rng.randint(1, max_nodes)
    ids = [f"v:{i:02d}" for i in range(n)]
    topo = ids[:]
    rng.shuffle(topo)
    edges = [
        Edge(topo[i], topo[j], rng.choice(list(EdgeKind)))
        for i, j in itertools.combinations(range(n), 2)
        if rng.random() < density
    ]
    return DepGraph.create([create_node(i) for i in ids], edges)


def all_dags(n: int, rng: random.Random) -> Iterator[DepGraph]:
    """Every DAG on ``n`` labeled nodes up to relabelling.

    Each subset of forward edges of 0 < 1 < ... < n-1 is yielded once, with
    node names drawn from a random permutation so id order and topological
    order disagree.
    """
    forward = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(forward)):
        names = [f"x{i}" for i in range(n)]
        rng.shuffle(names)
        chosen = [forward[i] for i in range(len(forward)) if mask >> i & 1]
        yield DepGraph.create(
            [create_node(name) for name in names],
            [Edge(names[u], names[v], EdgeKind.LOGICAL) for u, v in chosen],
        )
