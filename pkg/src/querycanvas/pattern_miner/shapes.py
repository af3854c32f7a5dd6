"""Canonical forms for the small labeled shapes the miner enumerates.

A shape is a connected undirected multigraph whose nodes carry an optional
label and whose edges carry a relationship type. Shapes stay tiny (a handful
of edges), so canonicalization by trying every node permutation is fine and
keeps the deduplication rule easy to audit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..query_model import QueryGraph, QueryNode, QueryRelation

ShapeEdge = tuple[int, int, str]  # (i, j, type) with i <= j


def _label_key(label: str | None) -> tuple:
    # None sorts before every real label
    return (0, "") if label is None else (1, label)


@dataclass(frozen=True)
class Shape:
    """A canonicalized shape: node labels by position plus sorted edges."""

    labels: tuple
    edges: tuple

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def code(self) -> tuple:
        """Hashable, totally ordered identity of the canonical form."""
        return (tuple(_label_key(label) for label in self.labels), self.edges)

    def to_query_graph(self) -> QueryGraph:
        query = QueryGraph()
        for index, label in enumerate(self.labels):
            query.add_node(QueryNode(id=f"n{index + 1}", label=label))
        for index, (i, j, rel_type) in enumerate(self.edges):
            query.add_relation(
                QueryRelation(
                    id=f"r{index + 1}",
                    source=f"n{i + 1}",
                    target=f"n{j + 1}",
                    type=rel_type,
                )
            )
        return query


def canonicalize(labels: tuple, edges: tuple) -> Shape:
    """Return the lexicographically smallest relabeling of the shape."""
    n = len(labels)
    best = None
    best_key = None
    for perm in itertools.permutations(range(n)):
        placed = [None] * n
        for old, new in enumerate(perm):
            placed[new] = labels[old]
        placed_edges = tuple(
            sorted(
                (min(perm[i], perm[j]), max(perm[i], perm[j]), rel_type)
                for i, j, rel_type in edges
            )
        )
        key = (tuple(_label_key(label) for label in placed), placed_edges)
        if best_key is None or key < best_key:
            best_key = key
            best = Shape(tuple(placed), placed_edges)
    if best is None:
        raise ValueError("cannot canonicalize an empty shape")
    return best
