/**
 * Pattern palette: drag a mined shape onto the canvas.
 *
 * insertPattern is a document-level twin of the server's pattern merge, so
 * the canvas can preview a drop instantly and still agree with what the
 * backend would produce. The rules: the pattern's first node is its
 * attachment point; dropping on a node merges attachment into that anchor
 * (labels must not disagree, an unlabeled anchor adopts the pattern's
 * label); every other pattern element gets a fresh id of the form
 * base, base_2, base_3, … against the ids already in the query.
 */

import type { PatternDocument, PatternSetDocument, QueryGraphDocument } from "./documents.js";
import { freshId, readNode, readRel, writeDocument } from "./querydoc.js";
import type { QNode, QRel } from "./querydoc.js";

export class PatternError extends Error {
  constructor(
    readonly code: "label-conflict" | "validation" | "graph-format",
    message: string,
  ) {
    super(message);
    this.name = "PatternError";
  }
}

export function insertPattern(
  query: QueryGraphDocument,
  patternGraph: QueryGraphDocument,
  anchor: string | null = null,
): QueryGraphDocument {
  const queryNodes = query.nodes.map(readNode);
  const queryRels = query.relationships.map(readRel);
  const shapeNodes = patternGraph.nodes.map(readNode);
  const shapeRels = patternGraph.relationships.map(readRel);

  let anchorNode: QNode | null = null;
  let attach: QNode | null = null;
  if (anchor !== null) {
    anchorNode = queryNodes.find((n) => n.id === anchor) ?? null;
    if (anchorNode === null) {
      throw new PatternError("validation", `anchor '${anchor}' is not a node of the query`);
    }
    attach = shapeNodes[0] ?? null;
    if (attach === null) {
      throw new PatternError("validation", "pattern has no nodes to attach");
    }
    if (anchorNode.label !== null && attach.label !== null && anchorNode.label !== attach.label) {
      throw new PatternError(
        "label-conflict",
        `anchor '${anchor}' has label '${anchorNode.label}' but the ` +
          `pattern attaches with label '${attach.label}'`,
      );
    }
  }

  const mergedNodes: QNode[] = [];
  const mergedRels: QRel[] = [];
  const nodeIds = new Set<string>();
  const relIds = new Set<string>();

  const addNode = (node: QNode): void => {
    if (nodeIds.has(node.id)) {
      throw new PatternError("graph-format", `duplicate query node id '${node.id}'`);
    }
    mergedNodes.push(node);
    nodeIds.add(node.id);
  };
  const addRel = (rel: QRel): void => {
    if (relIds.has(rel.id) || nodeIds.has(rel.id)) {
      throw new PatternError("graph-format", `duplicate query element id '${rel.id}'`);
    }
    for (const endpoint of [rel.source, rel.target]) {
      if (!nodeIds.has(endpoint)) {
        throw new PatternError(
          "graph-format",
          `query relation '${rel.id}' references missing node '${endpoint}'`,
        );
      }
    }
    mergedRels.push(rel);
    relIds.add(rel.id);
  };

  for (const node of queryNodes) {
    if (anchorNode !== null && node.id === anchor && node.label === null) {
      addNode({ ...node, label: attach!.label });
    } else {
      addNode(node);
    }
  }
  for (const rel of queryRels) {
    addRel(rel);
  }

  const takenNodes = new Set(nodeIds);
  const takenRels = new Set(relIds);
  const mapping = new Map<string, string>();
  shapeNodes.forEach((node, index) => {
    if (anchor !== null && index === 0) {
      mapping.set(node.id, anchor);
      return;
    }
    const fresh = freshId(node.id, takenNodes);
    mapping.set(node.id, fresh);
    addNode({ ...node, id: fresh });
  });
  for (const rel of shapeRels) {
    const fresh = freshId(rel.id, takenRels);
    addRel({
      ...rel,
      id: fresh,
      source: mapping.get(rel.source)!,
      target: mapping.get(rel.target)!,
    });
  }

  return writeDocument(mergedNodes, mergedRels);
}

/** Palette state: filled when a mining job reports done, cleared on reconnect. */
export class PatternPalette {
  private patterns: PaletteEntry[] = [];
  coverNote = "";

  setPatterns(doc: PatternSetDocument): void {
    this.patterns = doc.members.map((member, index) => ({
      index,
      member,
      caption: describePattern(member),
    }));
    this.coverNote = `${doc.members.length} patterns, cover size ${doc.total_cover_size}`;
  }

  clear(): void {
    this.patterns = [];
    this.coverNote = "";
  }

  entries(): readonly PaletteEntry[] {
    return this.patterns;
  }

  get(index: number): PatternDocument | undefined {
    return this.patterns[index]?.member;
  }
}

interface PaletteEntry {
  index: number;
  member: PatternDocument;
  caption: string;
}

export function describePattern(member: PatternDocument): string {
  const nodes = member.graph.nodes.length;
  const rels = member.graph.relationships.length;
  return `${nodes} node${nodes === 1 ? "" : "s"}, ${rels} rel${rels === 1 ? "" : "s"} (size ${member.size})`;
}
