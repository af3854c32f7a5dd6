"""Execute emission-grammar statements against an in-memory store.

The MATCH block becomes a query graph answered with relationship-isomorphic
matching; WHERE predicates filter the embeddings; RETURN projects element
ids. Identity inequalities from the translator are what upgrade the matching
to node isomorphism, which is exactly the behavior under test wherever the
emitted text and the matcher are compared.
"""

from __future__ import annotations

from ..graph_core import IsomorphismMode, PropertyGraph, match_subgraph
from ..scalars import scalar_equal
from .parser import ParsedQuery, parse


def execute_parsed(parsed: ParsedQuery, store: PropertyGraph) -> list:
    """Record dicts (output name -> element id), one per surviving embedding."""
    node_vars = parsed.node_vars
    records = []
    for embedding in match_subgraph(parsed.graph, store, IsomorphismMode.REL_ISO_ONLY):
        element = dict(embedding.node_map)
        element.update(embedding.rel_map)
        keep = True
        for var, key, value in parsed.equalities:
            if var in node_vars:
                props = store.nodes[element[var]].properties
            else:
                props = store.relationships[element[var]].properties
            if key not in props or not scalar_equal(props[key], value):
                keep = False
                break
        if keep:
            for left, right in parsed.inequalities:
                if element[left] == element[right]:
                    keep = False
                    break
        if keep:
            records.append({item.alias: element[item.variable] for item in parsed.returns})
    return records


def execute_text(text: str, store: PropertyGraph) -> list:
    return execute_parsed(parse(text), store)
