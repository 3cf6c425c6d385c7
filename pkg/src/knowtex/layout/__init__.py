"""Deterministic layered layout used by the TikZ emitter."""

from knowtex.layout.layered import (
    H_GAP,
    NODE_HEIGHT,
    RANK_SEP,
    LayeredLayout,
    assign_coordinates,
    assign_ranks,
    break_cycles,
    count_crossings,
    layered_layout,
    node_size,
    order_within_ranks,
)

__all__ = [
    "H_GAP",
    "NODE_HEIGHT",
    "RANK_SEP",
    "LayeredLayout",
    "assign_coordinates",
    "assign_ranks",
    "break_cycles",
    "count_crossings",
    "layered_layout",
    "node_size",
    "order_within_ranks",
]
