"""Multilevel graph partitioning: split a store into small induced subgraphs.

The mining pipeline needs a collection of small parts, not an optimal cut, so
this is a compact multilevel scheme: heavy-edge matching coarsens the graph,
greedy BFS growth produces initial blocks, and boundary moves refine the cut
on the way back up. Every part ends up with between 1 and 2 * target nodes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .graph_core import NodeId, PropertyGraph, RelId


@dataclass
class PartitionSet:
    parts: list[PropertyGraph] = field(default_factory=list)
    assignment: dict[NodeId, int] = field(default_factory=dict)
    cut_edges: list[RelId] = field(default_factory=list)


class _Level:
    """Weighted simple graph at one coarsening level."""

    def __init__(self, weights: dict, adj: dict, parents: dict | None = None):
        self.weights = weights  # node -> weight (finest: 1)
        self.adj = adj  # node -> {neighbor: edge weight}
        self.parents = parents  # coarse node -> list of finer nodes


def _finest_level(store: PropertyGraph) -> _Level:
    weights = {node_id: 1 for node_id in store.nodes}
    adj: dict[NodeId, dict[NodeId, int]] = {node_id: {} for node_id in store.nodes}
    for rel in store.relationships.values():
        if rel.source == rel.target:
            continue
        adj[rel.source][rel.target] = adj[rel.source].get(rel.target, 0) + 1
        adj[rel.target][rel.source] = adj[rel.target].get(rel.source, 0) + 1
    return _Level(weights, adj)


def _coarsen(level: _Level, cap: int, rng: random.Random) -> _Level | None:
    """Heavy-edge matching; merged pairs must stay within `cap` weight.
    Returns None when matching makes no progress."""
    order = sorted(level.weights)
    rng.shuffle(order)
    matched: dict = {}
    for u in order:
        if u in matched:
            continue
        best = None
        for v, w in sorted(level.adj[u].items()):
            if v in matched or v == u:
                continue
            if level.weights[u] + level.weights[v] > cap:
                continue
            if best is None or w > best[1] or (w == best[1] and v < best[0]):
                best = (v, w)
        if best is not None:
            matched[u] = best[0]
            matched[best[0]] = u

    if not matched:
        return None

    parents: dict = {}
    owner: dict = {}
    for u in sorted(level.weights):
        if u in owner:
            continue
        group = [u] if u not in matched else sorted([u, matched[u]])
        coarse_id = group[0]
        parents[coarse_id] = group
        for member in group:
            owner[member] = coarse_id

    weights = {c: sum(level.weights[m] for m in members) for c, members in parents.items()}
    adj: dict = {c: {} for c in parents}
    for u, neighbors in level.adj.items():
        cu = owner[u]
        for v, w in neighbors.items():
            cv = owner[v]
            if cu == cv:
                continue
            adj[cu][cv] = adj[cu].get(cv, 0) + w
    return _Level(weights, adj, parents)


def _grow_blocks(level: _Level, capacity: int) -> dict:
    """Greedy BFS growth: fill one block up to `capacity`, then start the next."""
    assignment: dict = {}
    unassigned = set(level.weights)

    def seed_key(node):
        return (len(level.adj[node]), node)

    block = -1
    while unassigned:
        block += 1
        seed = min(unassigned, key=seed_key)
        weight = 0
        queue = [seed]
        seen = {seed}
        while queue and weight < capacity:
            u = queue.pop(0)
            if u not in unassigned:
                continue
            if weight > 0 and weight + level.weights[u] > capacity:
                continue
            assignment[u] = block
            unassigned.discard(u)
            weight += level.weights[u]
            for v in sorted(level.adj[u]):
                if v in seen:
                    continue
                seen.add(v)
                queue.append(v)
    return assignment


def _refine(level: _Level, assignment: dict, size_cap: int, passes: int = 8) -> None:
    """Boundary moves: take any cut reduction, or an equal-cut move that
    strictly improves the balance between the two blocks involved."""
    block_weight: dict = {}
    for u, b in assignment.items():
        block_weight[b] = block_weight.get(b, 0) + level.weights[u]

    for _ in range(passes):
        improved = False
        for u in sorted(level.weights):
            b = assignment[u]
            incident: dict = {}
            for v, w in level.adj[u].items():
                incident[assignment[v]] = incident.get(assignment[v], 0) + w
            internal = incident.get(b, 0)
            w_u = level.weights[u]
            best = None
            for c, external in sorted(incident.items()):
                if c == b:
                    continue
                if block_weight[c] + w_u > size_cap:
                    continue
                if block_weight[b] - w_u < 1:
                    continue
                gain = external - internal
                if gain > 0 or (gain == 0 and block_weight[c] + w_u < block_weight[b]):
                    if best is None or gain > best[1]:
                        best = (c, gain)
            if best is not None:
                c = best[0]
                assignment[u] = c
                block_weight[b] -= w_u
                block_weight[c] += w_u
                improved = True
        if not improved:
            break


def partition(store: PropertyGraph, target_part_size: int = 30, seed: int = 0) -> PartitionSet:
    """Split the store into node-disjoint induced parts of 1..2*target nodes."""
    if target_part_size < 2:
        raise ValueError("target_part_size must be at least 2")
    n = len(store.nodes)
    if n == 0:
        return PartitionSet()

    nblocks = math.ceil(n / target_part_size)
    if nblocks <= 1:
        part = PropertyGraph(store.nodes.values(), store.relationships.values())
        return PartitionSet(
            parts=[part], assignment={node_id: 0 for node_id in store.nodes}, cut_edges=[]
        )

    rng = random.Random(seed)
    levels = [_finest_level(store)]
    stop_size = max(32, 4 * nblocks)
    while len(levels[-1].weights) > stop_size:
        coarser = _coarsen(levels[-1], cap=target_part_size, rng=rng)
        if coarser is None or len(coarser.weights) > 0.95 * len(levels[-1].weights):
            break
        levels.append(coarser)

    capacity = math.ceil(n / nblocks)
    assignment = _grow_blocks(levels[-1], capacity)
    _refine(levels[-1], assignment, size_cap=2 * target_part_size)

    for finer, coarser in zip(reversed(levels[:-1]), reversed(levels[1:])):
        projected = {}
        for coarse_id, members in coarser.parents.items():
            for member in members:
                projected[member] = assignment[coarse_id]
        assignment = projected
        _refine(finer, assignment, size_cap=2 * target_part_size)

    return _split(store, assignment)


def _split(store: PropertyGraph, assignment: dict) -> PartitionSet:
    blocks: dict[int, list[NodeId]] = {}
    for node_id, b in assignment.items():
        blocks.setdefault(b, []).append(node_id)
    ordered = sorted(blocks.values(), key=lambda members: min(members))

    final_assignment: dict[NodeId, int] = {}
    for index, members in enumerate(ordered):
        for node_id in members:
            final_assignment[node_id] = index

    parts = []
    cut_edges = []
    rels_by_part: dict[int, list] = {i: [] for i in range(len(ordered))}
    for rel_id in sorted(store.relationships):
        rel = store.relationships[rel_id]
        src_part = final_assignment[rel.source]
        tgt_part = final_assignment[rel.target]
        if src_part == tgt_part:
            rels_by_part[src_part].append(rel)
        else:
            cut_edges.append(rel_id)
    for index, members in enumerate(ordered):
        parts.append(
            PropertyGraph((store.nodes[m] for m in sorted(members)), rels_by_part[index])
        )
    return PartitionSet(parts=parts, assignment=final_assignment, cut_edges=cut_edges)
