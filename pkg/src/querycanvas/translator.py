"""Visual query graph to Cypher translation.

Emission shape: one MATCH line per relationship (isolated nodes get bare
MATCH lines), a WHERE clause holding property equalities plus one
`id(a) <> id(b)` inequality per node pair whose distinctness is not already
forced, and a RETURN clause listing every variable. The inequalities are what
turns the executor's relationship-isomorphism semantics into full node
isomorphism; pairs that can never collide (different labels, contradictory
property equalities) are eliminated up front. Output is deterministic, so the
same query graph always yields byte-identical text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyQueryError, LabelConflictError
from .query_model import QueryGraph, QueryNode, QueryRelation
from .scalars import Scalar, scalar_equal

_BARE_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class CypherText:
    text: str
    var_map: dict


def format_name(name: str) -> str:
    """Label, type or property key: bare when identifier-like, else backticked."""
    if _BARE_NAME.fullmatch(name):
        return name
    return "`" + name.replace("`", "``") + "`"


def format_literal(value: Scalar) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    return "'" + value.replace("\\", "\\\\").replace("'", "\\'") + "'"


def node_pairs(query: QueryGraph) -> list:
    """All unordered qnode pairs in insertion order."""
    qnodes = query.qnodes
    return [
        (qnodes[i], qnodes[j])
        for i in range(len(qnodes))
        for j in range(i + 1, len(qnodes))
    ]


def _provably_distinct(a: QueryNode, b: QueryNode) -> bool:
    if a.label is not None and b.label is not None and a.label != b.label:
        return True
    shared = set(a.properties) & set(b.properties)
    return any(not scalar_equal(a.properties[key], b.properties[key]) for key in shared)


def eliminate_trivial(pairs) -> list:
    """Drop pairs that cannot be bound to the same store node anyway."""
    return [pair for pair in pairs if not _provably_distinct(pair[0], pair[1])]


def translate(
    query: QueryGraph,
    node_isomorphism: bool = True,
    eliminate: bool = True,
) -> CypherText:
    """Emit Cypher text for the query graph.

    `node_isomorphism=False` drops the identity inequalities entirely;
    `eliminate=False` keeps even the trivially true ones. Both knobs exist for
    equivalence testing, the defaults are the production behavior.
    """
    if not query.qnodes:
        raise EmptyQueryError("cannot translate a query with no nodes")

    var_map: dict = {}
    for index, qnode in enumerate(query.qnodes):
        var_map[qnode.id] = f"n{index + 1}"
    for index, qrel in enumerate(query.qrels):
        var_map[qrel.id] = f"r{index + 1}"

    announced: set = set()

    def node_term(qnode_id: str) -> str:
        var = var_map[qnode_id]
        if qnode_id in announced:
            return f"({var})"
        announced.add(qnode_id)
        label = query.node(qnode_id).label
        if label is None:
            return f"({var})"
        return f"({var}:{format_name(label)})"

    lines = []
    connected: set = set()
    for qrel in query.qrels:
        connected.add(qrel.source)
        connected.add(qrel.target)
        rel_term = f"[{var_map[qrel.id]}]"
        if qrel.type is not None:
            rel_term = f"[{var_map[qrel.id]}:{format_name(qrel.type)}]"
        arrow = "->" if qrel.directed else "-"
        lines.append(f"MATCH {node_term(qrel.source)}-{rel_term}{arrow}{node_term(qrel.target)}")
    for qnode in query.qnodes:
        if qnode.id not in connected:
            lines.append(f"MATCH {node_term(qnode.id)}")

    predicates = []
    for qnode in query.qnodes:
        for key in sorted(qnode.properties):
            predicates.append(
                f"{var_map[qnode.id]}.{format_name(key)} = "
                f"{format_literal(qnode.properties[key])}"
            )
    for qrel in query.qrels:
        for key in sorted(qrel.properties):
            predicates.append(
                f"{var_map[qrel.id]}.{format_name(key)} = "
                f"{format_literal(qrel.properties[key])}"
            )
    if node_isomorphism:
        pairs = node_pairs(query)
        if eliminate:
            pairs = eliminate_trivial(pairs)
        for a, b in pairs:
            predicates.append(f"id({var_map[a.id]}) <> id({var_map[b.id]})")
    if predicates:
        lines.append("WHERE " + " AND ".join(predicates))

    variables = [var_map[qnode.id] for qnode in query.qnodes]
    variables += [var_map[qrel.id] for qrel in query.qrels]
    lines.append("RETURN " + ", ".join(variables))
    return CypherText(text="\n".join(lines), var_map=var_map)


def apply_pattern(query: QueryGraph, pattern, anchor: str | None = None) -> QueryGraph:
    """Insert a fresh copy of the pattern's shape into the query.

    With an anchor, the pattern's attachment node (its first node) merges
    into the anchor; their labels must not disagree. Returns a new graph, the
    input is never mutated.
    """
    shape: QueryGraph = pattern.graph
    anchor_node = None
    attach = None
    if anchor is not None:
        try:
            anchor_node = query.node(anchor)
        except KeyError:
            raise ValueError(f"anchor {anchor!r} is not a node of the query") from None
        attach = shape.qnodes[0]
        if (
            anchor_node.label is not None
            and attach.label is not None
            and anchor_node.label != attach.label
        ):
            raise LabelConflictError(
                f"anchor {anchor!r} has label {anchor_node.label!r} but the "
                f"pattern attaches with label {attach.label!r}"
            )

    merged = QueryGraph()
    for qnode in query.qnodes:
        if anchor_node is not None and qnode.id == anchor and qnode.label is None:
            qnode = QueryNode(id=qnode.id, label=attach.label, properties=qnode.properties)
        merged.add_node(qnode)
    for qrel in query.qrels:
        merged.add_relation(qrel)

    taken_nodes = {qnode.id for qnode in merged.qnodes}
    taken_rels = {qrel.id for qrel in merged.qrels}
    mapping: dict = {}
    for index, qnode in enumerate(shape.qnodes):
        if anchor is not None and index == 0:
            mapping[qnode.id] = anchor
            continue
        fresh = _fresh_id(qnode.id, taken_nodes)
        mapping[qnode.id] = fresh
        merged.add_node(QueryNode(id=fresh, label=qnode.label, properties=qnode.properties))
    for qrel in shape.qrels:
        fresh = _fresh_id(qrel.id, taken_rels)
        merged.add_relation(
            QueryRelation(
                id=fresh,
                source=mapping[qrel.source],
                target=mapping[qrel.target],
                type=qrel.type,
                directed=qrel.directed,
                properties=qrel.properties,
            )
        )
    return merged


def _fresh_id(base: str, taken: set) -> str:
    name = base
    suffix = 2
    while name in taken:
        name = f"{base}_{suffix}"
        suffix += 1
    taken.add(name)
    return name
