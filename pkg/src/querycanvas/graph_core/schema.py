"""Schema graph: the topology among distinct label sets.

Built entirely from the count store's label-set and triple registries, so it
never scans the element maps.
"""

from __future__ import annotations

from .model import NodeRecord, PropertyGraph, RelRecord


def _label_set_id(labels: frozenset[str]) -> str:
    return "+".join(sorted(labels)) if labels else "(no label)"


def schema_graph(store: PropertyGraph) -> PropertyGraph:
    """One node per distinct label set, one relationship per distinct
    (source label set, type, target label set) triple present in the store."""
    nodes = [
        NodeRecord(
            id=_label_set_id(labels),
            labels=labels,
            properties={"node_count": count},
        )
        for labels, count in sorted(store.counts.label_set_counts.items(), key=lambda kv: _label_set_id(kv[0]))
    ]
    rels = []
    triples = sorted(
        store.counts.triple_counts.items(),
        key=lambda kv: (_label_set_id(kv[0][0]), kv[0][1], _label_set_id(kv[0][2])),
    )
    for (source_labels, rel_type, target_labels), count in triples:
        source_id = _label_set_id(source_labels)
        target_id = _label_set_id(target_labels)
        rels.append(
            RelRecord(
                id=f"{source_id}|{rel_type}|{target_id}",
                type=rel_type,
                source=source_id,
                target=target_id,
                properties={"rel_count": count},
            )
        )
    return PropertyGraph(nodes, rels)
