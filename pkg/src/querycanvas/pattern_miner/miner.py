"""Top-k edge-diversified pattern mining over a partitioned store.

Shapes are enumerated level by level (by edge count) from the partition's
parts, deduplicated by canonical form, and folded into a bounded pattern set.
While the set holds fewer than k members a new shape is appended; at capacity
a candidate replaces the minimum-loss member only when its benefit clears the
swap threshold, which also guarantees every swap strictly grows the covered
edge set. The mined coverage is at least a quarter of the exhaustive optimum,
which `brute_force_optimum` computes for small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from ..errors import InstanceTooLargeError
from ..graph_core import IsomorphismMode, NodeRecord, match_subgraph
from ..partitioner import PartitionSet
from ..query_model import QueryGraph
from .shapes import Shape, canonicalize

CoverItem = tuple[int, str]  # (part index, relationship id)

ORACLE_EDGE_LIMIT = 30
ORACLE_TAU_LIMIT = 3
ORACLE_K_LIMIT = 4


def _annotation(node: NodeRecord) -> str | None:
    """Single-label annotation used for mined shapes: smallest label, if any."""
    return min(node.labels) if node.labels else None


def _check_connected(query: QueryGraph) -> None:
    if not query.qrels:
        raise ValueError("pattern shape must have at least one relationship")
    adjacency: dict[str, set[str]] = {qnode.id: set() for qnode in query.qnodes}
    for qrel in query.qrels:
        adjacency[qrel.source].add(qrel.target)
        adjacency[qrel.target].add(qrel.source)
    stack = [query.qnodes[0].id]
    reached = set(stack)
    while stack:
        for neighbor in adjacency[stack.pop()]:
            if neighbor not in reached:
                reached.add(neighbor)
                stack.append(neighbor)
    if len(reached) != len(query.qnodes):
        raise ValueError("pattern shape must be connected")


@dataclass(frozen=True)
class Pattern:
    """A mined shape together with the part edges it covers."""

    graph: QueryGraph
    size: int
    cover: frozenset

    def __post_init__(self):
        _check_connected(self.graph)
        if self.size < 1:
            raise ValueError("pattern size must be at least 1")

    def to_document(self) -> dict:
        return {
            "graph": self.graph.to_document(),
            "size": self.size,
            "cover": sorted([part, rel_id] for part, rel_id in self.cover),
        }

    @classmethod
    def from_document(cls, document: dict) -> "Pattern":
        cover = frozenset((int(part), rel_id) for part, rel_id in document["cover"])
        return cls(
            graph=QueryGraph.from_document(document["graph"]),
            size=int(document["size"]),
            cover=cover,
        )


@dataclass
class PatternSet:
    """At most k patterns plus the union of their covers."""

    members: list = field(default_factory=list)
    total_cover: frozenset = frozenset()
    k: int = 1
    alpha: float = 0.5

    def to_document(self) -> dict:
        return {
            "k": self.k,
            "alpha": self.alpha,
            "total_cover_size": len(self.total_cover),
            "members": [member.to_document() for member in self.members],
        }

    @classmethod
    def from_document(cls, document: dict) -> "PatternSet":
        members = [Pattern.from_document(entry) for entry in document["members"]]
        return cls(
            members=members,
            total_cover=_cover_union(members),
            k=int(document["k"]),
            alpha=float(document["alpha"]),
        )


@dataclass(frozen=True)
class SwapScores:
    """Benefit of a candidate and the cheapest member to give up for it."""

    score_b: int
    score_l: int
    victim: int | None


def _cover_union(members) -> frozenset:
    return frozenset().union(*(member.cover for member in members)) if members else frozenset()


def coverage(shape: QueryGraph, parts: PartitionSet) -> frozenset:
    """Part edges lying in the image of some label-preserving,
    relationship-injective embedding of the shape."""
    covered = set()
    for index, part in enumerate(parts.parts):
        for embedding in match_subgraph(shape, part, IsomorphismMode.REL_ISO_ONLY):
            for rel_id in embedding.rel_map.values():
                covered.add((index, rel_id))
    return frozenset(covered)


def _level_one(parts: PartitionSet) -> Iterator[Shape]:
    seen = set()
    for part in parts.parts:
        for rel_id in sorted(part.relationships):
            rel = part.relationships[rel_id]
            source_label = _annotation(part.nodes[rel.source])
            target_label = _annotation(part.nodes[rel.target])
            found = [canonicalize((source_label, target_label), ((0, 1, rel.type),))]
            if rel.source == rel.target:
                # a store self-loop also hosts the one-node loop shape
                found.append(canonicalize((source_label,), ((0, 0, rel.type),)))
            for shape in found:
                if shape.code in seen:
                    continue
                seen.add(shape.code)
                yield shape


def enumerate_candidates(parts: PartitionSet, tau: int, frontier=()) -> Iterator[Shape]:
    """Yield each tau-edge connected shape embeddable in the parts exactly once.

    Level 1 scans the part edges directly; higher levels extend every
    embedding of every frontier shape by one incident part edge, either out
    to a fresh node or closing onto an already-mapped one. Restricting any
    embedding of a tau-edge shape to it minus a removable edge lands on a
    frontier embedding, so extension from all (tau-1)-shapes reaches every
    tau-shape that occurs.
    """
    if tau < 1:
        raise ValueError("tau must be at least 1")
    if tau == 1:
        yield from _level_one(parts)
        return
    seen = set()
    for base in frontier:
        query = base.to_query_graph()
        position = {qnode.id: index for index, qnode in enumerate(query.qnodes)}
        for part in parts.parts:
            for embedding in match_subgraph(query, part, IsomorphismMode.REL_ISO_ONLY):
                # only annotation-exact embeddings are extension bases, so a
                # shape never carries an unlabeled node over a labeled one and
                # every shape keeps the smallest-label annotation of its image
                if any(
                    base.labels[position[qnode_id]] != _annotation(part.nodes[node_id])
                    for qnode_id, node_id in embedding.node_map.items()
                ):
                    continue
                used = set(embedding.rel_map.values())
                image: dict = {}
                for qnode_id, node_id in embedding.node_map.items():
                    image.setdefault(node_id, []).append(position[qnode_id])
                fresh = len(base.labels)
                for u in sorted(image):
                    for rel_id in part.incident(u):
                        if rel_id in used:
                            continue
                        rel = part.relationships[rel_id]
                        w = rel.other(u)
                        # each variant: (edge, label of the fresh node or absent).
                        # A fresh endpoint is a new query node folded onto an
                        # already-covered store node or reaching a new one.
                        variants = []
                        if rel.source == rel.target:
                            # loop on one preimage of u, tie between two, or
                            # half-fresh tie out to a new preimage of u
                            for qa in image[u]:
                                for qb in image[u]:
                                    if qa <= qb:
                                        variants.append(((qa, qb, rel.type), ()))
                                variants.append(((qa, fresh, rel.type), (_annotation(part.nodes[u]),)))
                        elif w in image:
                            if u > w:
                                continue  # handled once, from the smaller endpoint
                            for qa in image[u]:
                                for qb in image[w]:
                                    variants.append(((min(qa, qb), max(qa, qb), rel.type), ()))
                            for qa in image[u]:
                                variants.append(((qa, fresh, rel.type), (_annotation(part.nodes[w]),)))
                            for qb in image[w]:
                                variants.append(((qb, fresh, rel.type), (_annotation(part.nodes[u]),)))
                        else:
                            for qa in image[u]:
                                variants.append(((qa, fresh, rel.type), (_annotation(part.nodes[w]),)))
                        for edge, new_label in variants:
                            shape = canonicalize(base.labels + new_label, base.edges + (edge,))
                            if shape.code in seen:
                                continue
                            seen.add(shape.code)
                            yield shape


def swap_scores(candidate: Pattern, members, total_cover: frozenset) -> SwapScores:
    """Exact set-marginals: benefit against the current total cover, loss as
    the coverage that disappears when one member is dropped."""
    score_b = len(candidate.cover - total_cover)
    if not members:
        return SwapScores(score_b=score_b, score_l=0, victim=None)
    best_loss = None
    victim = None
    for index in range(len(members)):
        without = _cover_union([m for j, m in enumerate(members) if j != index])
        loss = len(total_cover - without)
        if best_loss is None or loss < best_loss:
            best_loss = loss
            victim = index
    return SwapScores(score_b=score_b, score_l=best_loss, victim=victim)


def swap_decision(scores: SwapScores, total_cover_size: int, k: int, alpha: float) -> bool:
    """True iff score_b > (1+alpha)*score_l + (1-alpha)*total/k.

    Evaluated in exact rational arithmetic over the binary value of alpha, so
    the strict inequality has no floating-point boundary ambiguity.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    a = Fraction(alpha)
    threshold = (1 + a) * scores.score_l + (1 - a) * Fraction(total_cover_size, k)
    return Fraction(scores.score_b) > threshold


def mine(
    parts: PartitionSet,
    k: int,
    alpha: float = 0.5,
    tau_max: int = 3,
    trace: list | None = None,
) -> PatternSet:
    """Mine up to k edge-diversified patterns of at most tau_max edges.

    Appends fill the set while it is below k; afterwards candidates go
    through the swap rule. When `trace` is a list, one entry per accepted
    swap is recorded as (tau, victim index, scores, size before, size after).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    if tau_max < 1:
        raise ValueError("tau_max must be at least 1")

    members: list = []
    total: frozenset = frozenset()
    frontier: list = []
    for tau in range(1, tau_max + 1):
        level = list(enumerate_candidates(parts, tau, frontier))
        for shape in level:
            graph = shape.to_query_graph()
            candidate = Pattern(graph=graph, size=tau, cover=coverage(graph, parts))
            if len(members) < k:
                members.append(candidate)
                total = total | candidate.cover
                continue
            scores = swap_scores(candidate, members, total)
            if swap_decision(scores, len(total), k, alpha):
                before = len(total)
                members[scores.victim] = candidate
                total = _cover_union(members)
                if trace is not None:
                    trace.append((tau, scores.victim, scores, before, len(total)))
        frontier = level
    return PatternSet(members=members, total_cover=total, k=k, alpha=alpha)


def brute_force_optimum(parts: PartitionSet, k: int, tau_max: int) -> PatternSet:
    """Coverage-maximal k-subset of all enumerable shapes. Test oracle only;
    refuses instances beyond its documented limits."""
    edge_total = sum(len(part.relationships) for part in parts.parts)
    if edge_total > ORACLE_EDGE_LIMIT or tau_max > ORACLE_TAU_LIMIT or k > ORACLE_K_LIMIT:
        raise InstanceTooLargeError(
            f"brute-force oracle limits: {ORACLE_EDGE_LIMIT} edges, "
            f"tau_max {ORACLE_TAU_LIMIT}, k {ORACLE_K_LIMIT}"
        )

    candidates = []
    masks = []
    bit_of: dict = {}
    frontier: list = []
    for tau in range(1, tau_max + 1):
        level = list(enumerate_candidates(parts, tau, frontier))
        for shape in level:
            graph = shape.to_query_graph()
            cover = coverage(graph, parts)
            candidates.append(Pattern(graph=graph, size=tau, cover=cover))
            mask = 0
            for item in cover:
                mask |= 1 << bit_of.setdefault(item, len(bit_of))
            masks.append(mask)
        frontier = level

    pick = min(k, len(candidates))
    best_size = -1
    best_combo: tuple = ()
    for combo in itertools.combinations(range(len(candidates)), pick):
        mask = 0
        for index in combo:
            mask |= masks[index]
        size = mask.bit_count()
        if size > best_size:
            best_size = size
            best_combo = combo
    members = [candidates[index] for index in best_combo]
    return PatternSet(members=members, total_cover=_cover_union(members), k=k, alpha=0.0)
