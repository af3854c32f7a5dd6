"""In-memory labeled property multigraph with an incrementally built count store.

A PropertyGraph is immutable after construction and safe to share across
threads. Count-store lookups never touch the element maps; full scans go
through iter_nodes/iter_rels, which bump an instrumentation counter so tests
can prove the constant-time metadata contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..errors import DanglingEndpointError, GraphFormatError
from ..scalars import Scalar, check_properties, type_name

NodeId = str
RelId = str


@dataclass(frozen=True)
class NodeRecord:
    id: NodeId
    labels: frozenset[str] = frozenset()
    properties: dict[str, Scalar] = field(default_factory=dict)


@dataclass(frozen=True)
class RelRecord:
    id: RelId
    type: str
    source: NodeId
    target: NodeId
    properties: dict[str, Scalar] = field(default_factory=dict)

    def other(self, node_id: NodeId) -> NodeId:
        return self.target if node_id == self.source else self.source


class CountStore:
    """Aggregates maintained while the graph is built; O(1) to read.

    Tracks totals, per-label and per-type counts, the property-key registry
    with inferred data types, and the distinct label-set / schema-triple
    tallies that let schema_graph run without scanning elements.
    """

    def __init__(self) -> None:
        self.node_total = 0
        self.rel_total = 0
        self.label_counts: dict[str, int] = {}
        self.type_counts: dict[str, int] = {}
        self.property_types: dict[tuple[str, str], str] = {}
        self.label_set_counts: dict[frozenset[str], int] = {}
        self.triple_counts: dict[tuple[frozenset[str], str, frozenset[str]], int] = {}

    def _register_property(self, owner: str, key: str, value: Scalar) -> None:
        seen = self.property_types.get((owner, key))
        name = type_name(value)
        if seen is None:
            self.property_types[(owner, key)] = name
        elif seen != name:
            self.property_types[(owner, key)] = "mixed"

    def add_node(self, node: NodeRecord) -> None:
        self.node_total += 1
        for label in node.labels:
            self.label_counts[label] = self.label_counts.get(label, 0) + 1
        self.label_set_counts[node.labels] = self.label_set_counts.get(node.labels, 0) + 1
        for key, value in node.properties.items():
            self._register_property("node", key, value)

    def add_rel(self, rel: RelRecord, source_labels: frozenset[str], target_labels: frozenset[str]) -> None:
        self.rel_total += 1
        self.type_counts[rel.type] = self.type_counts.get(rel.type, 0) + 1
        triple = (source_labels, rel.type, target_labels)
        self.triple_counts[triple] = self.triple_counts.get(triple, 0) + 1
        for key, value in rel.properties.items():
            self._register_property("relationship", key, value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CountStore) and (
            self.node_total,
            self.rel_total,
            self.label_counts,
            self.type_counts,
            self.property_types,
            self.label_set_counts,
            self.triple_counts,
        ) == (
            other.node_total,
            other.rel_total,
            other.label_counts,
            other.type_counts,
            other.property_types,
            other.label_set_counts,
            other.triple_counts,
        )


class PropertyGraph:
    """Nodes, relationships, counts, and a per-node adjacency index."""

    def __init__(self, nodes: Iterable[NodeRecord] = (), relationships: Iterable[RelRecord] = ()):
        self.nodes: dict[NodeId, NodeRecord] = {}
        self.relationships: dict[RelId, RelRecord] = {}
        self.counts = CountStore()
        self._adjacency: dict[NodeId, list[RelId]] = {}
        self.scan_count = 0  # instrumentation; not part of graph identity

        for node in nodes:
            self._add_node(node)
        for rel in relationships:
            self._add_rel(rel)
        for incident in self._adjacency.values():
            incident.sort()

    def _add_node(self, node: NodeRecord) -> None:
        if node.id in self.nodes:
            raise GraphFormatError(f"duplicate node id {node.id!r}")
        check_properties(node.properties, f"node {node.id!r}")
        self.nodes[node.id] = node
        self._adjacency[node.id] = []
        self.counts.add_node(node)

    def _add_rel(self, rel: RelRecord) -> None:
        if rel.id in self.relationships:
            raise GraphFormatError(f"duplicate relationship id {rel.id!r}")
        if not rel.type:
            raise GraphFormatError(f"relationship {rel.id!r} has an empty type")
        for endpoint in (rel.source, rel.target):
            if endpoint not in self.nodes:
                raise DanglingEndpointError(rel.id, endpoint)
        check_properties(rel.properties, f"relationship {rel.id!r}")
        self.relationships[rel.id] = rel
        self._adjacency[rel.source].append(rel.id)
        if rel.target != rel.source:
            self._adjacency[rel.target].append(rel.id)
        self.counts.add_rel(rel, self.nodes[rel.source].labels, self.nodes[rel.target].labels)

    # -- scans (instrumented) ------------------------------------------------

    def iter_nodes(self) -> Iterator[NodeRecord]:
        self.scan_count += 1
        return iter(self.nodes.values())

    def iter_rels(self) -> Iterator[RelRecord]:
        self.scan_count += 1
        return iter(self.relationships.values())

    # -- constant-time lookups ----------------------------------------------

    def incident(self, node_id: NodeId) -> list[RelId]:
        """Relationship ids touching node_id, sorted; self-loops listed once."""
        return self._adjacency[node_id]

    def degree(self, node_id: NodeId) -> int:
        return len(self._adjacency[node_id])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PropertyGraph)
            and self.nodes == other.nodes
            and self.relationships == other.relationships
        )

    def __repr__(self) -> str:
        return f"PropertyGraph({self.counts.node_total} nodes, {self.counts.rel_total} relationships)"
