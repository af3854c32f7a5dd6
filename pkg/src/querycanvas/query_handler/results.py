"""Result sets with ID-reference deduplication.

Records bind variables to graph elements, and hub elements show up in many
records. Keeping full payloads per record wastes transfer and memory, so a
result set stores one reference list (variable to element id per record) plus
tables of distinct elements. Reconstruction is exact; nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph_core import NodeRecord, RelRecord


@dataclass
class ResultSet:
    variables: dict = field(default_factory=dict)  # var -> "node" | "relationship"
    reference_list: list = field(default_factory=list)  # per record: var -> element id
    distinct_nodes: dict = field(default_factory=dict)
    distinct_rels: dict = field(default_factory=dict)

    def records(self) -> list:
        return reconstruct(self)

    def to_document(self) -> dict:
        return {
            "variables": dict(self.variables),
            "reference_list": [dict(entry) for entry in self.reference_list],
            "distinct_nodes": {
                node_id: {
                    "labels": sorted(node.labels),
                    "properties": dict(node.properties),
                }
                for node_id, node in sorted(self.distinct_nodes.items())
            },
            "distinct_rels": {
                rel_id: {
                    "type": rel.type,
                    "source": rel.source,
                    "target": rel.target,
                    "properties": dict(rel.properties),
                }
                for rel_id, rel in sorted(self.distinct_rels.items())
            },
        }

    @classmethod
    def from_document(cls, document: dict) -> "ResultSet":
        nodes = {
            node_id: NodeRecord(
                id=node_id,
                labels=frozenset(entry["labels"]),
                properties=dict(entry["properties"]),
            )
            for node_id, entry in document["distinct_nodes"].items()
        }
        rels = {
            rel_id: RelRecord(
                id=rel_id,
                type=entry["type"],
                source=entry["source"],
                target=entry["target"],
                properties=dict(entry["properties"]),
            )
            for rel_id, entry in document["distinct_rels"].items()
        }
        return cls(
            variables=dict(document["variables"]),
            reference_list=[dict(entry) for entry in document["reference_list"]],
            distinct_nodes=nodes,
            distinct_rels=rels,
        )


def dedupe(variables: dict, raw_records: list) -> ResultSet:
    """Collapse full records (variable -> element) into a ResultSet.

    Each distinct element is stored once however many records reference it."""
    result = ResultSet(variables=dict(variables))
    for record in raw_records:
        entry = {}
        for var, element in record.items():
            entry[var] = element.id
            if variables[var] == "node":
                result.distinct_nodes.setdefault(element.id, element)
            else:
                result.distinct_rels.setdefault(element.id, element)
        result.reference_list.append(entry)
    return result


def reconstruct(result: ResultSet) -> list:
    """Inverse of dedupe: full records, in original order."""
    records = []
    for entry in result.reference_list:
        record = {}
        for var, element_id in entry.items():
            if result.variables[var] == "node":
                record[var] = result.distinct_nodes[element_id]
            else:
                record[var] = result.distinct_rels[element_id]
        records.append(record)
    return records
