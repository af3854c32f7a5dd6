"""Shared fixtures: quick graph/query builders and seeded random generators."""

from __future__ import annotations

import random

import pytest

from querycanvas.graph_core import NodeRecord, PropertyGraph, RelRecord
from querycanvas.query_model import QueryGraph, QueryNode, QueryRelation


def make_graph(nodes, rels=()):
    """nodes: (id, labels, props) or (id, labels); rels: (id, type, src, tgt[, props])."""
    node_records = []
    for spec in nodes:
        node_id, labels = spec[0], spec[1]
        props = spec[2] if len(spec) > 2 else {}
        node_records.append(NodeRecord(id=node_id, labels=frozenset(labels), properties=props))
    rel_records = []
    for spec in rels:
        rel_id, rel_type, src, tgt = spec[0], spec[1], spec[2], spec[3]
        props = spec[4] if len(spec) > 4 else {}
        rel_records.append(RelRecord(id=rel_id, type=rel_type, source=src, target=tgt, properties=props))
    return PropertyGraph(node_records, rel_records)


def make_query(nodes, rels=()):
    """nodes: (id, label, props) or (id, label) or (id,); rels: (id, src, tgt[, type[, directed]])."""
    q = QueryGraph()
    for spec in nodes:
        node_id = spec[0]
        label = spec[1] if len(spec) > 1 else None
        props = spec[2] if len(spec) > 2 else {}
        q.add_node(QueryNode(id=node_id, label=label, properties=props))
    for spec in rels:
        rel_id, src, tgt = spec[0], spec[1], spec[2]
        rel_type = spec[3] if len(spec) > 3 else None
        directed = spec[4] if len(spec) > 4 else False
        q.add_relation(QueryRelation(id=rel_id, source=src, target=tgt, type=rel_type, directed=directed))
    return q


def random_graph(seed, n_nodes=12, n_rels=18, labels=("A", "B"), types=("T", "S"),
                 unlabeled_share=0.25, props=False):
    """Random labeled multigraph; deterministic for a given seed."""
    rng = random.Random(seed)
    nodes = []
    for i in range(n_nodes):
        if rng.random() < unlabeled_share:
            node_labels = frozenset()
        else:
            node_labels = frozenset([rng.choice(labels)])
        node_props = {"rank": rng.randint(0, 3)} if props and rng.random() < 0.5 else {}
        nodes.append(NodeRecord(id=f"n{i:03d}", labels=node_labels, properties=node_props))
    rels = []
    for j in range(n_rels):
        src = rng.choice(nodes).id
        tgt = rng.choice(nodes).id
        rels.append(RelRecord(id=f"r{j:03d}", type=rng.choice(types), source=src, target=tgt))
    return PropertyGraph(nodes, rels)


@pytest.fixture
def two_hop_query():
    """The trap query: an unlabeled path n2 - r1 - n1 - r2 - n3."""
    return make_query([("n2",), ("n1",), ("n3",)], [("r1", "n2", "n1"), ("r2", "n1", "n3")])


@pytest.fixture
def parallel_pair_store():
    """Two nodes joined by two parallel relationships."""
    return make_graph([("a", []), ("b", [])], [("e1", "T", "a", "b"), ("e2", "T", "a", "b")])


@pytest.fixture
def single_edge_store():
    """Two nodes joined by one relationship."""
    return make_graph([("a", []), ("b", [])], [("e1", "T", "a", "b")])


@pytest.fixture
def movie_store():
    """3 Person, 2 Movie, 4 relationships; the metadata fixture."""
    return make_graph(
        [
            ("p1", ["Person"], {"name": "Ada"}),
            ("p2", ["Person"], {"name": "Bo"}),
            ("p3", ["Person"], {"name": "Cy"}),
            ("m1", ["Movie"], {"title": "M1", "year": 1999}),
            ("m2", ["Movie"], {"title": "M2", "year": 2003}),
        ],
        [
            ("x1", "ACTED_IN", "p1", "m1"),
            ("x2", "ACTED_IN", "p2", "m1"),
            ("x3", "DIRECTED", "p3", "m2"),
            ("x4", "ACTED_IN", "p3", "m2"),
        ],
    )
