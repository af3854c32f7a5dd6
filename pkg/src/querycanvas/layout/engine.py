"""Pruning plus the modified force-directed simulation.

Changes relative to the textbook force-directed scheme: self-loops and
parallel relationships are pruned from the simulation input, connected pairs
target a constant optimal distance, repulsion is zeroed beyond r_max, there
is no bounding box, and the centroid is translated to the origin afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph_core import NodeId, PropertyGraph, RelId
from .params import LayoutParams, LayoutResult


@dataclass
class PrunedGraph:
    """Undirected simple graph used as simulation input."""

    node_ids: list[NodeId]
    edges: list[tuple[NodeId, NodeId]]
    kept_rels: dict[tuple[NodeId, NodeId], RelId]
    self_loops: int
    parallel: int


def prune_for_layout(g: PropertyGraph) -> PrunedGraph:
    """Drop self-loops, collapse parallel relationships to the lowest RelId."""
    node_ids = sorted(g.nodes)
    kept: dict[tuple[NodeId, NodeId], RelId] = {}
    self_loops = 0
    parallel = 0
    for rel_id in sorted(g.relationships):
        rel = g.relationships[rel_id]
        if rel.source == rel.target:
            self_loops += 1
            continue
        pair = (min(rel.source, rel.target), max(rel.source, rel.target))
        if pair in kept:
            parallel += 1
        else:
            kept[pair] = rel_id
    return PrunedGraph(
        node_ids=node_ids,
        edges=sorted(kept),
        kept_rels=kept,
        self_loops=self_loops,
        parallel=parallel,
    )


def initial_positions(g: PropertyGraph, params: LayoutParams) -> dict[NodeId, tuple[float, float]]:
    """Deterministic pseudo-random starting positions inside the unit disk."""
    node_ids = sorted(g.nodes)
    pos = _initial_array(len(node_ids), params.seed)
    return {node_id: (float(x), float(y)) for node_id, (x, y) in zip(node_ids, pos)}


def _initial_array(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    radius = np.sqrt(rng.random(n))
    angle = rng.random(n) * 2.0 * np.pi
    return np.column_stack((radius * np.cos(angle), radius * np.sin(angle)))


def layout(g: PropertyGraph, params: LayoutParams | None = None, backend: str | None = None) -> LayoutResult:
    """Run the simulation; positions end up with their centroid at the origin."""
    from . import get_step  # late import: backend table lives in __init__

    params = params or LayoutParams()
    pruned = prune_for_layout(g)
    n = len(pruned.node_ids)
    counts = {"self_loops": pruned.self_loops, "parallel": pruned.parallel}
    if n == 0:
        return LayoutResult(positions={}, pruned=counts)

    index = {node_id: i for i, node_id in enumerate(pruned.node_ids)}
    edges = np.asarray(
        [(index[u], index[v]) for u, v in pruned.edges], dtype=np.int64
    ).reshape(-1, 2)
    pos = _initial_array(n, params.seed)
    step = get_step(backend)
    scratch = np.zeros_like(pos)

    for temp in params.temperatures(n):
        step(pos, edges, params.d_opt, params.r_max, temp, scratch)

    pos -= pos.mean(axis=0)
    positions = {
        node_id: (float(pos[i, 0]), float(pos[i, 1])) for node_id, i in index.items()
    }
    return LayoutResult(positions=positions, pruned=counts)
