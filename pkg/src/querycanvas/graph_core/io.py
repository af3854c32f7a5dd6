"""Graph interchange format: one JSON document with nodes and relationships.

Schema (documented in docs/formats.md; all fixtures use it):

    {
      "nodes":         [{"id": str, "labels": [str, ...], "properties": {...}}, ...],
      "relationships": [{"id": str, "type": str, "source": str, "target": str,
                         "properties": {...}}, ...]
    }

IDs are strings, text is UTF-8, property values are boolean/integer/float/text.
"""

from __future__ import annotations

import json

from ..errors import GraphFormatError
from ..query_model import _expect_id, _expect_list
from .model import NodeRecord, PropertyGraph, RelRecord


def load_graph(document: bytes | str) -> PropertyGraph:
    """Parse an interchange document into a PropertyGraph.

    Raises GraphFormatError with line/offset on malformed JSON and
    DanglingEndpointError naming the offending relationship id.
    """
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, line=exc.lineno, offset=exc.colno) from exc
    return graph_from_document(doc)


def graph_from_document(doc: dict) -> PropertyGraph:
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a map")
    nodes = []
    for entry in _expect_list(doc, "nodes"):
        node_id = _expect_id(entry, "node")
        labels = entry.get("labels", [])
        if not isinstance(labels, list) or not all(isinstance(l, str) and l for l in labels):
            raise GraphFormatError(f"labels of node {node_id!r} must be an array of non-empty strings")
        nodes.append(
            NodeRecord(id=node_id, labels=frozenset(labels), properties=entry.get("properties") or {})
        )
    rels = []
    for entry in _expect_list(doc, "relationships"):
        rel_id = _expect_id(entry, "relationship")
        rel_type = entry.get("type")
        if not isinstance(rel_type, str) or not rel_type:
            raise GraphFormatError(f"type of relationship {rel_id!r} must be a non-empty string")
        for side in ("source", "target"):
            if not isinstance(entry.get(side), str):
                raise GraphFormatError(f"{side} of relationship {rel_id!r} must be a node id string")
        rels.append(
            RelRecord(
                id=rel_id,
                type=rel_type,
                source=entry["source"],
                target=entry["target"],
                properties=entry.get("properties") or {},
            )
        )
    return PropertyGraph(nodes, rels)


def graph_to_document(graph: PropertyGraph) -> dict:
    return {
        "nodes": [
            {"id": n.id, "labels": sorted(n.labels), "properties": dict(n.properties)}
            for n in sorted(graph.nodes.values(), key=lambda n: n.id)
        ],
        "relationships": [
            {
                "id": r.id,
                "type": r.type,
                "source": r.source,
                "target": r.target,
                "properties": dict(r.properties),
            }
            for r in sorted(graph.relationships.values(), key=lambda r: r.id)
        ],
    }


def serialize_graph(graph: PropertyGraph) -> str:
    return json.dumps(graph_to_document(graph), indent=2)
