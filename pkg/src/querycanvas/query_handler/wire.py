"""Statement inventory and allowlist for the remote HTTP transactional API.

Every statement the remote adapter may send is listed here or generated by
one of the builders below; docs/wire.md documents the payloads bit-exact.
The allowlist is the read-only guarantee: a statement is sendable only when
it is part of this fixed inventory, a per-label or per-type count built by
the builders, or text produced by the query translator (checked by parsing
it back). Anything else is rejected before a byte leaves the process.
"""

from __future__ import annotations

import re

from ..cypher import parse
from ..errors import CypherSyntaxError
from ..translator import format_name

PING = "RETURN 1 AS ok"
COUNT_NODES = "MATCH (n) RETURN count(n) AS value"
COUNT_RELS = "MATCH ()-[r]->() RETURN count(r) AS value"
LIST_LABELS = "CALL db.labels() YIELD label RETURN label"
LIST_TYPES = "CALL db.relationshipTypes() YIELD relationshipType RETURN relationshipType"
NODE_PROPERTY_REGISTRY = (
    "CALL db.schema.nodeTypeProperties() YIELD propertyName, propertyTypes "
    "RETURN propertyName, propertyTypes"
)
REL_PROPERTY_REGISTRY = (
    "CALL db.schema.relTypeProperties() YIELD propertyName, propertyTypes "
    "RETURN propertyName, propertyTypes"
)
SCHEMA_GRAPH = (
    "CALL db.schema.visualization() YIELD nodes, relationships "
    "RETURN nodes, relationships"
)
FETCH_NODES = (
    "MATCH (n) WHERE id(n) IN $ids "
    "RETURN id(n) AS id, labels(n) AS labels, properties(n) AS properties"
)
FETCH_RELS = (
    "MATCH ()-[r]->() WHERE id(r) IN $ids "
    "RETURN id(r) AS id, type(r) AS type, id(startNode(r)) AS source, "
    "id(endNode(r)) AS target, properties(r) AS properties"
)
EXPORT_NODES = (
    "MATCH (n) RETURN id(n) AS id, labels(n) AS labels, properties(n) AS properties "
    "ORDER BY id(n) SKIP $skip LIMIT $limit"
)
EXPORT_RELS = (
    "MATCH ()-[r]->() RETURN id(r) AS id, type(r) AS type, id(startNode(r)) AS source, "
    "id(endNode(r)) AS target, properties(r) AS properties "
    "ORDER BY id(r) SKIP $skip LIMIT $limit"
)

FIXED_STATEMENTS = frozenset(
    {
        PING,
        COUNT_NODES,
        COUNT_RELS,
        LIST_LABELS,
        LIST_TYPES,
        NODE_PROPERTY_REGISTRY,
        REL_PROPERTY_REGISTRY,
        SCHEMA_GRAPH,
        FETCH_NODES,
        FETCH_RELS,
        EXPORT_NODES,
        EXPORT_RELS,
    }
)

# Bare identifier or a backtick-quoted name (embedded backticks doubled).
_NAME = r"(?:[A-Za-z_][A-Za-z0-9_]*|`(?:[^`]|``)+`)"
_COUNT_LABEL = re.compile(rf"^MATCH \(n:{_NAME}\) RETURN count\(n\) AS value$")
_COUNT_TYPE = re.compile(rf"^MATCH \(\)-\[r:{_NAME}\]->\(\) RETURN count\(r\) AS value$")


def count_label_statement(label: str) -> str:
    return f"MATCH (n:{format_name(label)}) RETURN count(n) AS value"


def count_type_statement(rel_type: str) -> str:
    return f"MATCH ()-[r:{format_name(rel_type)}]->() RETURN count(r) AS value"


def id_projection(text: str) -> str:
    """Rewrite translator output so it returns element IDs instead of payloads.

    The final RETURN line lists bare variables; each becomes id(v) AS v, which
    is what the two-phase execute path needs for its reference list."""
    lines = text.split("\n")
    last = lines[-1]
    if not last.startswith("RETURN "):
        raise ValueError("statement does not end with a RETURN line")
    variables = [v.strip() for v in last[len("RETURN ") :].split(",")]
    lines[-1] = "RETURN " + ", ".join(f"id({v}) AS {v}" for v in variables)
    return "\n".join(lines)


def is_allowed(statement: str) -> bool:
    """True when the statement belongs to the read-only outbound grammar."""
    if statement in FIXED_STATEMENTS:
        return True
    if _COUNT_LABEL.match(statement) or _COUNT_TYPE.match(statement):
        return True
    try:
        parse(statement)
        return True
    except CypherSyntaxError:
        return False
