"""Property-graph data model, interchange I/O, reference matcher, schema."""

from .io import graph_from_document, graph_to_document, load_graph, serialize_graph
from .matcher import Embedding, IsomorphismMode, match_subgraph, node_satisfies, rel_satisfies
from .model import CountStore, NodeId, NodeRecord, PropertyGraph, RelId, RelRecord
from .schema import schema_graph

__all__ = [
    "CountStore",
    "Embedding",
    "IsomorphismMode",
    "NodeId",
    "NodeRecord",
    "PropertyGraph",
    "RelId",
    "RelRecord",
    "graph_from_document",
    "graph_to_document",
    "load_graph",
    "match_subgraph",
    "node_satisfies",
    "rel_satisfies",
    "schema_graph",
    "serialize_graph",
]
