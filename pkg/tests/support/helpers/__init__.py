"""
Test helper utilities.

Import common helpers for easy access:
    from tests.support.helpers import assert_dot_well_formed, reachability
"""

from .assertions import (
    assert_dot_well_formed,
    assert_tikz_well_formed,
    dot_edges,
    dot_nodes,
    tikz_draws,
    tikz_nodes,
)
from .determinism import get_test_seed, make_rng, seed_python_random
from .oracles import (
    closure_floyd_warshall,
    crossings,
    minimal_dag_reduction,
    mutual_reachability_classes,
    reachability,
)

__all__ = [
    # Assertions
    "assert_dot_well_formed",
    "assert_tikz_well_formed",
    "dot_edges",
    "dot_nodes",
    "tikz_draws",
    "tikz_nodes",
    # Determinism
    "get_test_seed",
    "make_rng",
    "seed_python_random",
    # Oracles
    "closure_floyd_warshall",
    "crossings",
    "minimal_dag_reduction",
    "mutual_reachability_classes",
    "reachability",
]
