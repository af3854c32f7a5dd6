"""The visual query model: nodes and relationships with optional constraints.

A QueryGraph is what the editor manipulates and what every backend consumes:
the matcher interprets it directly, the translator turns it into Cypher, and
the miner emits pattern shapes as property-free QueryGraphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import GraphFormatError
from .scalars import Scalar, check_properties


@dataclass(frozen=True)
class QueryNode:
    id: str
    label: str | None = None
    properties: dict[str, Scalar] = field(default_factory=dict)


@dataclass(frozen=True)
class QueryRelation:
    id: str
    source: str
    target: str
    type: str | None = None
    directed: bool = False
    properties: dict[str, Scalar] = field(default_factory=dict)


class QueryGraph:
    """An ordered collection of query nodes and relations.

    Insertion order is meaningful: the translator numbers variables by it.
    """

    def __init__(self, qnodes: list[QueryNode] | None = None, qrels: list[QueryRelation] | None = None):
        self.qnodes: list[QueryNode] = []
        self.qrels: list[QueryRelation] = []
        self._node_ids: set[str] = set()
        self._rel_ids: set[str] = set()
        for n in qnodes or []:
            self.add_node(n)
        for r in qrels or []:
            self.add_relation(r)

    def add_node(self, node: QueryNode) -> None:
        if node.id in self._node_ids:
            raise GraphFormatError(f"duplicate query node id {node.id!r}")
        check_properties(node.properties, f"query node {node.id!r}")
        if node.label is not None and (not isinstance(node.label, str) or not node.label):
            raise GraphFormatError(f"label of query node {node.id!r} must be a non-empty string")
        self.qnodes.append(node)
        self._node_ids.add(node.id)

    def add_relation(self, rel: QueryRelation) -> None:
        if rel.id in self._rel_ids or rel.id in self._node_ids:
            raise GraphFormatError(f"duplicate query element id {rel.id!r}")
        for endpoint in (rel.source, rel.target):
            if endpoint not in self._node_ids:
                raise GraphFormatError(
                    f"query relation {rel.id!r} references missing node {endpoint!r}"
                )
        check_properties(rel.properties, f"query relation {rel.id!r}")
        if rel.type is not None and (not isinstance(rel.type, str) or not rel.type):
            raise GraphFormatError(f"type of query relation {rel.id!r} must be a non-empty string")
        self.qrels.append(rel)
        self._rel_ids.add(rel.id)

    def node(self, node_id: str) -> QueryNode:
        for n in self.qnodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QueryGraph)
            and self.qnodes == other.qnodes
            and self.qrels == other.qrels
        )

    def __repr__(self) -> str:
        return f"QueryGraph({len(self.qnodes)} nodes, {len(self.qrels)} relations)"

    # -- document form -----------------------------------------------------

    def to_document(self) -> dict:
        nodes = []
        for n in self.qnodes:
            entry: dict = {"id": n.id}
            if n.label is not None:
                entry["label"] = n.label
            if n.properties:
                entry["properties"] = dict(n.properties)
            nodes.append(entry)
        rels = []
        for r in self.qrels:
            entry = {"id": r.id, "source": r.source, "target": r.target}
            if r.type is not None:
                entry["type"] = r.type
            if r.directed:
                entry["directed"] = True
            if r.properties:
                entry["properties"] = dict(r.properties)
            rels.append(entry)
        return {"nodes": nodes, "relationships": rels}

    @classmethod
    def from_document(cls, doc: dict) -> QueryGraph:
        if not isinstance(doc, dict):
            raise GraphFormatError("query document must be a map")
        q = cls()
        for entry in _expect_list(doc, "nodes"):
            q.add_node(
                QueryNode(
                    id=_expect_id(entry, "query node"),
                    label=entry.get("label"),
                    properties=entry.get("properties") or {},
                )
            )
        for entry in _expect_list(doc, "relationships"):
            q.add_relation(
                QueryRelation(
                    id=_expect_id(entry, "query relation"),
                    source=entry.get("source"),
                    target=entry.get("target"),
                    type=entry.get("type"),
                    directed=bool(entry.get("directed", False)),
                    properties=entry.get("properties") or {},
                )
            )
        return q

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, text: str | bytes) -> QueryGraph:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(exc.msg, line=exc.lineno, offset=exc.colno) from exc
        return cls.from_document(doc)


def _expect_list(doc: dict, key: str) -> list:
    value = doc.get(key, [])
    if not isinstance(value, list):
        raise GraphFormatError(f"{key!r} must be an array")
    return value


def _expect_id(entry: dict, what: str) -> str:
    if not isinstance(entry, dict):
        raise GraphFormatError(f"{what} entry must be a map")
    element_id = entry.get("id")
    if not isinstance(element_id, str) or not element_id:
        raise GraphFormatError(f"{what} id must be a non-empty string, got {element_id!r}")
    return element_id
