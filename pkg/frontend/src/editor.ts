/**
 * Editor state for the query canvas.
 *
 * Holds the query elements plus pure view state (positions, selection,
 * viewport). Semantic edits bump a revision counter and notify document
 * listeners so the app can re-translate; moves and selection changes only
 * notify view listeners. serialize() emits the canonical wire form, so the
 * server, the document files, and the canvas all speak the same bytes.
 */

import type { QueryGraphDocument, Scalar } from "./documents.js";
import { readNode, readRel, writeDocument } from "./querydoc.js";
import type { QNode, QRel } from "./querydoc.js";

export interface EditorNode extends QNode {
  x: number;
  y: number;
}

export type EditorRel = QRel;

export interface Viewport {
  panX: number;
  panY: number;
  zoom: number;
}

type Listener = () => void;

const NODE_ID_PREFIX = "a";
const REL_ID_PREFIX = "e";

export class EditorState {
  nodes: EditorNode[] = [];
  rels: EditorRel[] = [];
  selection = new Set<string>();
  viewport: Viewport = { panX: 0, panY: 0, zoom: 1 };
  /** Bumped on every semantic edit; view-only changes leave it alone. */
  revision = 0;

  private documentListeners: Listener[] = [];
  private viewListeners: Listener[] = [];

  onDocumentChange(listener: Listener): void {
    this.documentListeners.push(listener);
  }

  onViewChange(listener: Listener): void {
    this.viewListeners.push(listener);
  }

  private touchDocument(): void {
    this.revision += 1;
    for (const listener of this.documentListeners) {
      listener();
    }
  }

  private touchView(): void {
    for (const listener of this.viewListeners) {
      listener();
    }
  }

  // -- lookups -------------------------------------------------------------

  node(id: string): EditorNode | undefined {
    return this.nodes.find((n) => n.id === id);
  }

  rel(id: string): EditorRel | undefined {
    return this.rels.find((r) => r.id === id);
  }

  private takenIds(): Set<string> {
    const taken = new Set<string>();
    for (const n of this.nodes) {
      taken.add(n.id);
    }
    for (const r of this.rels) {
      taken.add(r.id);
    }
    return taken;
  }

  private nextId(prefix: string): string {
    const taken = this.takenIds();
    let n = 1;
    while (taken.has(`${prefix}${n}`)) {
      n += 1;
    }
    return `${prefix}${n}`;
  }

  // -- structural edits ----------------------------------------------------

  /** A click on empty canvas: one fresh, unconstrained node. */
  addNodeAt(x: number, y: number): EditorNode {
    const node: EditorNode = { id: this.nextId(NODE_ID_PREFIX), label: null, properties: {}, x, y };
    this.nodes.push(node);
    this.touchDocument();
    return node;
  }

  /** A drag between two nodes: one fresh, unconstrained, undirected relation. */
  addRelation(source: string, target: string): EditorRel {
    if (!this.node(source) || !this.node(target)) {
      throw new Error(`relation endpoints must be existing nodes: ${source} -> ${target}`);
    }
    const rel: EditorRel = {
      id: this.nextId(REL_ID_PREFIX),
      source,
      target,
      type: null,
      directed: false,
      properties: {},
    };
    this.rels.push(rel);
    this.touchDocument();
    return rel;
  }

  /** Removes every selected element; deleting a node takes its relations with it. */
  deleteSelection(): void {
    if (this.selection.size === 0) {
      return;
    }
    const goneNodes = new Set(this.nodes.filter((n) => this.selection.has(n.id)).map((n) => n.id));
    this.nodes = this.nodes.filter((n) => !goneNodes.has(n.id));
    this.rels = this.rels.filter(
      (r) => !this.selection.has(r.id) && !goneNodes.has(r.source) && !goneNodes.has(r.target),
    );
    this.selection.clear();
    this.touchDocument();
  }

  // -- constraint edits (element panel) -------------------------------------

  setLabel(nodeId: string, label: string | null): void {
    const node = this.requireNode(nodeId);
    node.label = label;
    this.touchDocument();
  }

  setType(relId: string, type: string | null): void {
    const rel = this.requireRel(relId);
    rel.type = type;
    this.touchDocument();
  }

  setDirected(relId: string, directed: boolean): void {
    const rel = this.requireRel(relId);
    rel.directed = directed;
    this.touchDocument();
  }

  setProperty(elementId: string, key: string, value: Scalar): void {
    this.requireElement(elementId).properties[key] = value;
    this.touchDocument();
  }

  removeProperty(elementId: string, key: string): void {
    delete this.requireElement(elementId).properties[key];
    this.touchDocument();
  }

  // -- view-only changes -----------------------------------------------------

  moveNode(nodeId: string, x: number, y: number): void {
    const node = this.requireNode(nodeId);
    node.x = x;
    node.y = y;
    this.touchView();
  }

  select(elementId: string, additive = false): void {
    if (!additive) {
      this.selection.clear();
    }
    this.selection.add(elementId);
    this.touchView();
  }

  clearSelection(): void {
    if (this.selection.size === 0) {
      return;
    }
    this.selection.clear();
    this.touchView();
  }

  setViewport(viewport: Viewport): void {
    this.viewport = viewport;
    this.touchView();
  }

  // -- document form ----------------------------------------------------------

  serialize(): QueryGraphDocument {
    return writeDocument(this.nodes, this.rels);
  }

  /**
   * Replaces the whole query with a document (pattern insertion, file open).
   * Positions of surviving node ids are kept; new nodes fan out around
   * `at` (or a default spot) so a dropped pattern lands where it was dropped.
   */
  applyDocument(doc: QueryGraphDocument, at?: { x: number; y: number }): void {
    const kept = new Map(this.nodes.map((n) => [n.id, { x: n.x, y: n.y }]));
    const origin = at ?? { x: 160, y: 140 };
    let placed = 0;
    const nodes: EditorNode[] = [];
    for (const entry of doc.nodes) {
      const base = readNode(entry);
      const spot = kept.get(base.id) ?? fanOut(origin, placed++);
      nodes.push({ ...base, x: spot.x, y: spot.y });
    }
    this.nodes = nodes;
    this.rels = doc.relationships.map(readRel);
    this.selection = new Set([...this.selection].filter((id) => this.elementExists(id)));
    this.touchDocument();
  }

  static deserialize(doc: QueryGraphDocument): EditorState {
    const state = new EditorState();
    state.applyDocument(doc);
    state.revision = 0;
    return state;
  }

  // -- helpers -------------------------------------------------------------

  private elementExists(id: string): boolean {
    return this.node(id) !== undefined || this.rel(id) !== undefined;
  }

  private requireNode(id: string): EditorNode {
    const node = this.node(id);
    if (!node) {
      throw new Error(`no such node: ${id}`);
    }
    return node;
  }

  private requireRel(id: string): EditorRel {
    const rel = this.rel(id);
    if (!rel) {
      throw new Error(`no such relation: ${id}`);
    }
    return rel;
  }

  private requireElement(id: string): EditorNode | EditorRel {
    const found = this.node(id) ?? this.rel(id);
    if (!found) {
      throw new Error(`no such element: ${id}`);
    }
    return found;
  }
}

/** Deterministic default placement: a loose ring around the origin point. */
function fanOut(origin: { x: number; y: number }, index: number): { x: number; y: number } {
  if (index === 0) {
    return { x: origin.x, y: origin.y };
  }
  const ring = Math.ceil(index / 6);
  const angle = ((index - 1) % 6) * (Math.PI / 3) + ring * 0.5;
  const radius = 90 * ring;
  return {
    x: origin.x + radius * Math.cos(angle),
    y: origin.y + radius * Math.sin(angle),
  };
}
