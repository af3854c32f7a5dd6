"""Reference subgraph matcher: backtracking with candidate filtering.

Matching is undirected unless a query relation carries the directed flag.
Relationship bindings are always injective within one embedding; node
bindings are injective only under NodeIso. This mirrors the behavior of
graph query engines, which prevent a relationship from appearing twice in
one result record but happily bind two query nodes to the same stored node.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..query_model import QueryGraph, QueryNode, QueryRelation
from ..scalars import scalar_equal
from .model import NodeId, NodeRecord, PropertyGraph, RelId, RelRecord


class IsomorphismMode(enum.Enum):
    REL_ISO_ONLY = "rel-iso-only"
    NODE_ISO = "node-iso"


@dataclass(frozen=True)
class Embedding:
    node_map: dict[str, NodeId] = field(default_factory=dict)
    rel_map: dict[str, RelId] = field(default_factory=dict)

    def key(self, query: QueryGraph) -> tuple:
        return (
            tuple(self.node_map[n.id] for n in query.qnodes),
            tuple(self.rel_map[r.id] for r in query.qrels),
        )


def node_satisfies(qnode: QueryNode, node: NodeRecord) -> bool:
    if qnode.label is not None and qnode.label not in node.labels:
        return False
    for key, value in qnode.properties.items():
        if key not in node.properties or not scalar_equal(node.properties[key], value):
            return False
    return True


def rel_satisfies(qrel: QueryRelation, rel: RelRecord) -> bool:
    if qrel.type is not None and rel.type != qrel.type:
        return False
    for key, value in qrel.properties.items():
        if key not in rel.properties or not scalar_equal(rel.properties[key], value):
            return False
    return True


def _plan(query: QueryGraph) -> tuple[list[QueryRelation], list[QueryNode]]:
    """Order query relations so each one (after the first of its component)
    touches an already-visited node; isolated query nodes come last."""
    incident: dict[str, list[QueryRelation]] = {n.id: [] for n in query.qnodes}
    for qrel in query.qrels:
        incident[qrel.source].append(qrel)
        incident[qrel.target].append(qrel)

    ordered: list[QueryRelation] = []
    done_rels: set[str] = set()
    visited_nodes: set[str] = set()
    for start in query.qnodes:
        if start.id in visited_nodes or not incident[start.id]:
            continue
        frontier = [start.id]
        visited_nodes.add(start.id)
        while frontier:
            current = frontier.pop(0)
            for qrel in incident[current]:
                if qrel.id in done_rels:
                    continue
                done_rels.add(qrel.id)
                ordered.append(qrel)
                for endpoint in (qrel.source, qrel.target):
                    if endpoint not in visited_nodes:
                        visited_nodes.add(endpoint)
                        frontier.append(endpoint)
    isolated = [n for n in query.qnodes if n.id not in visited_nodes]
    return ordered, isolated


def match_subgraph(
    query: QueryGraph, store: PropertyGraph, mode: IsomorphismMode
) -> list[Embedding]:
    """Enumerate all embeddings of the query into the store under `mode`.

    Results are deterministic: sorted by the mapped ids in query insertion
    order. The empty query yields no embeddings.
    """
    if not query.qnodes:
        return []

    qnode_by_id = {n.id: n for n in query.qnodes}
    qdegree: dict[str, int] = {n.id: 0 for n in query.qnodes}
    for qrel in query.qrels:
        qdegree[qrel.source] += 1
        if qrel.target != qrel.source:
            qdegree[qrel.target] += 1

    ordered_rels, isolated = _plan(query)
    sorted_node_ids = sorted(store.nodes)
    sorted_rel_ids = sorted(store.relationships)

    results: list[Embedding] = []
    node_map: dict[str, NodeId] = {}
    used_rels: set[RelId] = set()
    used_nodes: set[NodeId] = set()
    node_iso = mode is IsomorphismMode.NODE_ISO

    def can_bind(qid: str, node: NodeRecord) -> bool:
        if node_iso and node.id in used_nodes:
            return False
        if not node_satisfies(qnode_by_id[qid], node):
            return False
        return qdegree[qid] <= store.degree(node.id)

    def bind(qid: str, node_id: NodeId) -> None:
        node_map[qid] = node_id
        if node_iso:
            used_nodes.add(node_id)

    def unbind(qid: str) -> None:
        node_id = node_map.pop(qid)
        if node_iso:
            used_nodes.discard(node_id)

    def orientations(qrel: QueryRelation, rel: RelRecord) -> list[tuple[NodeId, NodeId]]:
        """(source image, target image) pairs this store rel can realize."""
        if qrel.directed:
            return [(rel.source, rel.target)]
        if rel.source == rel.target:
            return [(rel.source, rel.target)]
        return [(rel.source, rel.target), (rel.target, rel.source)]

    def extend_rel(idx: int, rel_map: dict[str, RelId]) -> None:
        if idx == len(ordered_rels):
            extend_isolated(0, rel_map)
            return
        qrel = ordered_rels[idx]
        src_bound = node_map.get(qrel.source)
        tgt_bound = node_map.get(qrel.target)

        if src_bound is not None:
            candidates = store.incident(src_bound)
        elif tgt_bound is not None:
            candidates = store.incident(tgt_bound)
        else:
            candidates = sorted_rel_ids  # first relation of a component

        for rel_id in candidates:
            if rel_id in used_rels:
                continue
            rel = store.relationships[rel_id]
            if not rel_satisfies(qrel, rel):
                continue
            for src_img, tgt_img in orientations(qrel, rel):
                if src_bound is not None and src_bound != src_img:
                    continue
                if tgt_bound is not None and tgt_bound != tgt_img:
                    continue
                newly = []
                ok = True
                if src_bound is None:
                    if qrel.source == qrel.target:
                        if src_img != tgt_img:
                            continue
                    if can_bind(qrel.source, store.nodes[src_img]):
                        bind(qrel.source, src_img)
                        newly.append(qrel.source)
                    else:
                        ok = False
                if ok and node_map.get(qrel.target) is None:
                    if can_bind(qrel.target, store.nodes[tgt_img]):
                        bind(qrel.target, tgt_img)
                        newly.append(qrel.target)
                    else:
                        ok = False
                if ok and node_map[qrel.target] == tgt_img and node_map[qrel.source] == src_img:
                    used_rels.add(rel_id)
                    rel_map[qrel.id] = rel_id
                    extend_rel(idx + 1, rel_map)
                    del rel_map[qrel.id]
                    used_rels.discard(rel_id)
                for qid in newly:
                    unbind(qid)

    def extend_isolated(idx: int, rel_map: dict[str, RelId]) -> None:
        if idx == len(isolated):
            results.append(Embedding(dict(node_map), dict(rel_map)))
            return
        qnode = isolated[idx]
        for node_id in sorted_node_ids:
            if can_bind(qnode.id, store.nodes[node_id]):
                bind(qnode.id, node_id)
                extend_isolated(idx + 1, rel_map)
                unbind(qnode.id)

    extend_rel(0, {})
    results.sort(key=lambda e: e.key(query))
    return results
