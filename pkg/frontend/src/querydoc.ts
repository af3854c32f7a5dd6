/**
 * Reading and writing query-graph documents.
 *
 * The canonical form omits every default: no label/type key when the
 * constraint is absent, no properties key when the map is empty, directed
 * only when true. Writers here are the single place that shape is produced,
 * so serialized documents stay stable under a parse/serialize round trip.
 */

import type {
  QueryGraphDocument,
  QueryNodeDocument,
  QueryRelationDocument,
  Scalar,
} from "./documents.js";

export interface QNode {
  id: string;
  label: string | null;
  properties: Record<string, Scalar>;
}

export interface QRel {
  id: string;
  source: string;
  target: string;
  type: string | null;
  directed: boolean;
  properties: Record<string, Scalar>;
}

export function readNode(entry: QueryNodeDocument): QNode {
  return {
    id: entry.id,
    label: entry.label ?? null,
    properties: { ...(entry.properties ?? {}) },
  };
}

export function readRel(entry: QueryRelationDocument): QRel {
  return {
    id: entry.id,
    source: entry.source,
    target: entry.target,
    type: entry.type ?? null,
    directed: Boolean(entry.directed ?? false),
    properties: { ...(entry.properties ?? {}) },
  };
}

export function writeNode(node: QNode): QueryNodeDocument {
  const entry: QueryNodeDocument = { id: node.id };
  if (node.label !== null) {
    entry.label = node.label;
  }
  if (Object.keys(node.properties).length > 0) {
    entry.properties = { ...node.properties };
  }
  return entry;
}

export function writeRel(rel: QRel): QueryRelationDocument {
  const entry: QueryRelationDocument = { id: rel.id, source: rel.source, target: rel.target };
  if (rel.type !== null) {
    entry.type = rel.type;
  }
  if (rel.directed) {
    entry.directed = true;
  }
  if (Object.keys(rel.properties).length > 0) {
    entry.properties = { ...rel.properties };
  }
  return entry;
}

export function writeDocument(nodes: Iterable<QNode>, rels: Iterable<QRel>): QueryGraphDocument {
  return {
    nodes: [...nodes].map(writeNode),
    relationships: [...rels].map(writeRel),
  };
}

/** First free name in the series base, base_2, base_3, …; claims it in `taken`. */
export function freshId(base: string, taken: Set<string>): string {
  let name = base;
  let suffix = 2;
  while (taken.has(name)) {
    name = `${base}_${suffix}`;
    suffix += 1;
  }
  taken.add(name);
  return name;
}
