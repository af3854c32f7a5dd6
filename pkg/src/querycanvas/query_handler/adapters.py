"""Store adapters: embedded in-memory execution and a remote HTTP client.

Both adapters expose the same three calls (fetch_metadata, execute, close)
so callers never branch on where the data lives. The embedded adapter runs
the reference matcher against a PropertyGraph and reads metadata straight
from its count store, touching no elements. The remote adapter speaks the
HTTP transactional API documented in docs/wire.md: every outbound statement
passes the read-only allowlist, metadata is bundled into one transaction,
and execute runs two phases (ID projection, then one batched element fetch)
inside one transaction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import httpx

from ..errors import (
    AuthenticationError,
    CapabilityError,
    NetworkError,
    QueryTimeoutError,
    ReadOnlyViolationError,
    RemoteQueryError,
)
from ..graph_core import (
    IsomorphismMode,
    NodeRecord,
    PropertyGraph,
    RelRecord,
    graph_from_document,
    graph_to_document,
    match_subgraph,
    schema_graph,
)
from ..query_model import QueryGraph
from ..translator import translate
from . import wire
from .results import ResultSet, dedupe


@dataclass(frozen=True)
class EmbeddedSpec:
    store: PropertyGraph


@dataclass(frozen=True)
class RemoteSpec:
    endpoint: str
    user: str
    password: str
    database: str = "neo4j"
    timeout: float = 30.0


@dataclass
class Metadata:
    node_count: int
    rel_count: int
    label_counts: dict = field(default_factory=dict)
    type_counts: dict = field(default_factory=dict)
    property_types: dict = field(default_factory=dict)  # (owner, key) -> type name
    schema: PropertyGraph = field(default_factory=PropertyGraph)

    def to_document(self) -> dict:
        registry: dict = {"node": {}, "relationship": {}}
        for (owner, key), name in sorted(self.property_types.items()):
            registry[owner][key] = name
        return {
            "node_count": self.node_count,
            "rel_count": self.rel_count,
            "label_counts": dict(sorted(self.label_counts.items())),
            "type_counts": dict(sorted(self.type_counts.items())),
            "property_types": registry,
            "schema": graph_to_document(self.schema),
        }


class EmbeddedAdapter:
    def __init__(self, store: PropertyGraph):
        self.store = store

    def fetch_metadata(self) -> Metadata:
        counts = self.store.counts
        return Metadata(
            node_count=counts.node_total,
            rel_count=counts.rel_total,
            label_counts=dict(counts.label_counts),
            type_counts=dict(counts.type_counts),
            property_types=dict(counts.property_types),
            schema=schema_graph(self.store),
        )

    def execute(self, query: QueryGraph) -> ResultSet:
        translated = translate(query)
        variables = {translated.var_map[q.id]: "node" for q in query.qnodes}
        variables.update({translated.var_map[r.id]: "relationship" for r in query.qrels})
        records = []
        for embedding in match_subgraph(query, self.store, IsomorphismMode.NODE_ISO):
            record = {
                translated.var_map[qid]: self.store.nodes[node_id]
                for qid, node_id in embedding.node_map.items()
            }
            record.update(
                {
                    translated.var_map[qid]: self.store.relationships[rel_id]
                    for qid, rel_id in embedding.rel_map.items()
                }
            )
            records.append(record)
        return dedupe(variables, records)

    def export_store(self, page_size: int = 500) -> PropertyGraph:
        return self.store

    def close(self) -> None:
        pass


# Remote property type names collapse onto the scalar model; anything the
# model cannot represent exactly, or any conflict across rows, is "mixed".
_REMOTE_TYPE_NAMES = {
    "String": "text",
    "Long": "integer",
    "Integer": "integer",
    "Double": "float",
    "Float": "float",
    "Boolean": "boolean",
}


def _row_type(remote_names: list) -> str:
    mapped = {_REMOTE_TYPE_NAMES.get(name, "mixed") for name in remote_names}
    return mapped.pop() if len(mapped) == 1 else "mixed"


class RemoteAdapter:
    def __init__(self, spec: RemoteSpec):
        self.spec = spec
        self.endpoint = spec.endpoint.rstrip("/")
        self.sent_statements: list[str] = []
        self._tx_base = f"{self.endpoint}/db/{spec.database}/tx"
        self._client = httpx.Client(auth=(spec.user, spec.password), timeout=spec.timeout)
        self._metadata_lock = threading.Lock()

    # -- wire plumbing --------------------------------------------------

    def _payload(self, rounds: list) -> dict:
        statements = []
        for statement, parameters in rounds:
            if not wire.is_allowed(statement):
                raise ReadOnlyViolationError(
                    f"statement is outside the read-only grammar: {statement}"
                )
            entry: dict = {"statement": statement}
            if parameters:
                entry["parameters"] = parameters
            statements.append(entry)
        return {"statements": statements}

    def _post(self, url: str, rounds: list, tx_url: str | None = None) -> dict:
        payload = self._payload(rounds)
        first = rounds[0][0] if rounds else "COMMIT"
        try:
            response = self._client.post(url, json=payload)
        except httpx.TimeoutException as exc:
            raise QueryTimeoutError(first, self.spec.timeout) from exc
        except httpx.HTTPError as exc:
            raise NetworkError(self.endpoint, str(exc)) from exc
        self.sent_statements.extend(statement for statement, _ in rounds)
        if response.status_code == 401:
            raise AuthenticationError("endpoint rejected the supplied credentials")
        try:
            body = response.json()
        except ValueError as exc:
            raise CapabilityError("endpoint returned a non-JSON response") from exc
        if not isinstance(body, dict) or "errors" not in body:
            raise CapabilityError("endpoint response lacks the transactional envelope")
        if body["errors"]:
            self._rollback(tx_url or body.get("commit", "").removesuffix("/commit"))
            error = body["errors"][0]
            raise RemoteQueryError(error.get("code", "error"), error.get("message", ""))
        return body

    def _open(self, rounds: list) -> tuple[dict, str, str]:
        body = self._post(self._tx_base, rounds)
        commit_url = body.get("commit")
        if not isinstance(commit_url, str) or not commit_url.endswith("/commit"):
            raise CapabilityError("endpoint response lacks a commit address")
        return body, commit_url.removesuffix("/commit"), commit_url

    def _commit(self, commit_url: str, tx_url: str) -> None:
        self._post(commit_url, [], tx_url=tx_url)

    def _rollback(self, tx_url: str) -> None:
        if not tx_url:
            return
        try:
            self._client.delete(tx_url)
        except httpx.HTTPError:
            pass  # the transaction dies with its idle timeout anyway

    @staticmethod
    def _rows(body: dict, index: int) -> list:
        try:
            result = body["results"][index]
            return [entry["row"] for entry in result["data"]]
        except (KeyError, IndexError, TypeError) as exc:
            raise CapabilityError("endpoint response is missing expected rows") from exc

    # -- adapter surface ------------------------------------------------

    def verify(self) -> None:
        """No-op read transaction proving reachability, auth and protocol."""
        body, tx_url, commit_url = self._open([(wire.PING, None)])
        if self._rows(body, 0) != [[1]]:
            raise CapabilityError("endpoint did not answer the readiness probe")
        self._commit(commit_url, tx_url)

    def fetch_metadata(self) -> Metadata:
        with self._metadata_lock:
            return self._fetch_metadata()

    def _fetch_metadata(self) -> Metadata:
        first_round = [
            (wire.COUNT_NODES, None),
            (wire.COUNT_RELS, None),
            (wire.LIST_LABELS, None),
            (wire.LIST_TYPES, None),
            (wire.NODE_PROPERTY_REGISTRY, None),
            (wire.REL_PROPERTY_REGISTRY, None),
            (wire.SCHEMA_GRAPH, None),
        ]
        body, tx_url, commit_url = self._open(first_round)
        node_count = self._rows(body, 0)[0][0]
        rel_count = self._rows(body, 1)[0][0]
        labels = sorted(row[0] for row in self._rows(body, 2))
        types = sorted(row[0] for row in self._rows(body, 3))

        property_types: dict = {}
        for owner, index in (("node", 4), ("relationship", 5)):
            for key, remote_names in self._rows(body, index):
                if key is None:
                    continue  # a type with no properties reports a null row
                merged = _row_type(remote_names)
                seen = property_types.get((owner, key))
                if seen is not None and seen != merged:
                    merged = "mixed"
                property_types[(owner, key)] = merged

        schema_nodes, schema_rels = self._rows(body, 6)[0]
        schema = graph_from_document({"nodes": schema_nodes, "relationships": schema_rels})

        second_round = [(wire.count_label_statement(label), None) for label in labels]
        second_round += [(wire.count_type_statement(rel_type), None) for rel_type in types]
        label_counts: dict = {}
        type_counts: dict = {}
        if second_round:
            body = self._post(tx_url, second_round, tx_url=tx_url)
            for offset, label in enumerate(labels):
                label_counts[label] = self._rows(body, offset)[0][0]
            for offset, rel_type in enumerate(types):
                type_counts[rel_type] = self._rows(body, len(labels) + offset)[0][0]
        self._commit(commit_url, tx_url)
        return Metadata(
            node_count=node_count,
            rel_count=rel_count,
            label_counts=label_counts,
            type_counts=type_counts,
            property_types=property_types,
            schema=schema,
        )

    def execute(self, query: QueryGraph) -> ResultSet:
        translated = translate(query)
        projected = wire.id_projection(translated.text)
        variables = {translated.var_map[q.id]: "node" for q in query.qnodes}
        variables.update({translated.var_map[r.id]: "relationship" for r in query.qrels})

        body, tx_url, commit_url = self._open([(projected, None)])
        columns = body["results"][0].get("columns", [])
        reference_list = []
        node_ids: list = []  # raw wire values, first-seen order
        rel_ids: list = []
        seen: set = set()  # (kind, raw): nodes and rels have separate id spaces
        for row in self._rows(body, 0):
            entry = {}
            for var, raw in zip(columns, row):
                entry[var] = str(raw)
                kind = variables[var]
                if (kind, raw) not in seen:
                    seen.add((kind, raw))
                    (node_ids if kind == "node" else rel_ids).append(raw)
            reference_list.append(entry)

        fetch_round = []
        if node_ids:
            fetch_round.append((wire.FETCH_NODES, {"ids": node_ids}))
        if rel_ids:
            fetch_round.append((wire.FETCH_RELS, {"ids": rel_ids}))
        distinct_nodes: dict = {}
        distinct_rels: dict = {}
        if fetch_round:
            body = self._post(tx_url, fetch_round, tx_url=tx_url)
            index = 0
            if node_ids:
                for raw, labels, props in self._rows(body, index):
                    distinct_nodes[str(raw)] = NodeRecord(
                        id=str(raw), labels=frozenset(labels), properties=props or {}
                    )
                index += 1
            if rel_ids:
                for raw, rel_type, source, target, props in self._rows(body, index):
                    distinct_rels[str(raw)] = RelRecord(
                        id=str(raw),
                        type=rel_type,
                        source=str(source),
                        target=str(target),
                        properties=props or {},
                    )
        self._commit(commit_url, tx_url)

        for entry in reference_list:
            for var, element_id in entry.items():
                table = distinct_nodes if variables[var] == "node" else distinct_rels
                if element_id not in table:
                    raise CapabilityError(f"fetch round did not return element {element_id!r}")
        return ResultSet(
            variables=variables,
            reference_list=reference_list,
            distinct_nodes=distinct_nodes,
            distinct_rels=distinct_rels,
        )

    def export_store(self, page_size: int = 500) -> PropertyGraph:
        """Stream the whole remote store through paged reads, one transaction."""
        if page_size < 1:
            raise ValueError("page_size must be at least 1")

        def pages(statement: str, tx_url: str) -> list:
            rows: list = []
            skip = 0
            while True:
                body = self._post(
                    tx_url, [(statement, {"skip": skip, "limit": page_size})], tx_url=tx_url
                )
                page = self._rows(body, 0)
                rows.extend(page)
                if len(page) < page_size:
                    return rows
                skip += page_size

        body, tx_url, commit_url = self._open([])
        node_rows = pages(wire.EXPORT_NODES, tx_url)
        rel_rows = pages(wire.EXPORT_RELS, tx_url)
        self._commit(commit_url, tx_url)
        nodes = [
            NodeRecord(id=str(raw), labels=frozenset(labels), properties=props or {})
            for raw, labels, props in node_rows
        ]
        rels = [
            RelRecord(
                id=str(raw),
                type=rel_type,
                source=str(source),
                target=str(target),
                properties=props or {},
            )
            for raw, rel_type, source, target, props in rel_rows
        ]
        return PropertyGraph(nodes, rels)

    def close(self) -> None:
        self._client.close()


StoreAdapter = EmbeddedAdapter | RemoteAdapter


def connect(spec: EmbeddedSpec | RemoteSpec) -> StoreAdapter:
    """Open an adapter; the remote flavour is verified before it is returned."""
    if isinstance(spec, EmbeddedSpec):
        return EmbeddedAdapter(spec.store)
    adapter = RemoteAdapter(spec)
    try:
        adapter.verify()
    except Exception:
        adapter.close()
        raise
    return adapter
