/**
 * JSON document shapes spoken by the API.
 *
 * Field names match the wire exactly; the UI never reshapes server values,
 * it only displays them (see docs/formats.md in the repository root).
 */

export type Scalar = boolean | number | string;

export interface QueryNodeDocument {
  id: string;
  label?: string;
  properties?: Record<string, Scalar>;
}

export interface QueryRelationDocument {
  id: string;
  source: string;
  target: string;
  type?: string;
  directed?: boolean;
  properties?: Record<string, Scalar>;
}

export interface QueryGraphDocument {
  nodes: QueryNodeDocument[];
  relationships: QueryRelationDocument[];
}

export interface GraphNodeDocument {
  id: string;
  labels: string[];
  properties: Record<string, Scalar>;
}

export interface GraphRelationshipDocument {
  id: string;
  type: string;
  source: string;
  target: string;
  properties: Record<string, Scalar>;
}

export interface GraphDocument {
  nodes: GraphNodeDocument[];
  relationships: GraphRelationshipDocument[];
}

export interface MetadataDocument {
  node_count: number;
  rel_count: number;
  label_counts: Record<string, number>;
  type_counts: Record<string, number>;
  property_types: {
    node: Record<string, string>;
    relationship: Record<string, string>;
  };
  schema: GraphDocument;
}

export interface PatternDocument {
  graph: QueryGraphDocument;
  size: number;
  cover: [number, string][];
}

export interface PatternSetDocument {
  k: number;
  alpha: number;
  total_cover_size: number;
  members: PatternDocument[];
}

/** Distinct-element payloads carry no redundant id field; the key is the id. */
export interface DistinctNodeDocument {
  labels: string[];
  properties: Record<string, Scalar>;
}

export interface DistinctRelDocument {
  type: string;
  source: string;
  target: string;
  properties: Record<string, Scalar>;
}

export interface ResultSetDocument {
  variables: Record<string, "node" | "relationship">;
  reference_list: Record<string, string>[];
  distinct_nodes: Record<string, DistinctNodeDocument>;
  distinct_rels: Record<string, DistinctRelDocument>;
}

export interface LayoutDocument {
  positions: { id: string; x: number; y: number }[];
  pruned: { self_loops: number; parallel: number };
}

export interface ErrorDocument {
  error: { code: string; message: string };
}

export interface ConnectResponse {
  session: string;
  metadata: MetadataDocument;
}

export interface TranslateResponse {
  text: string;
  var_map: Record<string, string>;
}

export interface ExecuteResponse {
  result: ResultSetDocument;
  layout: LayoutDocument;
}

export type PatternsStatus =
  | { status: "none" }
  | { status: "running" }
  | { status: "done"; patterns: PatternSetDocument }
  | { status: "failed"; error: ErrorDocument };
