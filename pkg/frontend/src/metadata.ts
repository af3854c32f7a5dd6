/**
 * Database info panel: a read-only view over the connection's metadata.
 *
 * Flattens the metadata document into display rows (totals, per-label and
 * per-type counts, property registries) and exposes the label/type
 * vocabularies the constraint panel offers as suggestions.
 */

import type { MetadataDocument } from "./documents.js";

export interface InfoRow {
  name: string;
  value: string;
}

export class MetadataPanel {
  private doc: MetadataDocument | null = null;

  set(doc: MetadataDocument): void {
    this.doc = doc;
  }

  clear(): void {
    this.doc = null;
  }

  hasMetadata(): boolean {
    return this.doc !== null;
  }

  totals(): InfoRow[] {
    if (this.doc === null) {
      return [];
    }
    return [
      { name: "nodes", value: String(this.doc.node_count) },
      { name: "relationships", value: String(this.doc.rel_count) },
    ];
  }

  labelRows(): InfoRow[] {
    return countRows(this.doc?.label_counts ?? {});
  }

  typeRows(): InfoRow[] {
    return countRows(this.doc?.type_counts ?? {});
  }

  nodePropertyRows(): InfoRow[] {
    return registryRows(this.doc?.property_types.node ?? {});
  }

  relPropertyRows(): InfoRow[] {
    return registryRows(this.doc?.property_types.relationship ?? {});
  }

  /** Vocabulary for the label picker, busiest first. */
  labels(): string[] {
    return this.labelRows().map((row) => row.name);
  }

  /** Vocabulary for the type picker, busiest first. */
  types(): string[] {
    return this.typeRows().map((row) => row.name);
  }

  schemaSummary(): string {
    if (this.doc === null) {
      return "";
    }
    const nodes = this.doc.schema.nodes.length;
    const rels = this.doc.schema.relationships.length;
    return `schema graph: ${nodes} label node(s), ${rels} connection(s)`;
  }
}

function countRows(counts: Record<string, number>): InfoRow[] {
  return Object.entries(counts)
    .sort(([a, na], [b, nb]) => nb - na || a.localeCompare(b))
    .map(([name, count]) => ({ name, value: String(count) }));
}

function registryRows(registry: Record<string, string>): InfoRow[] {
  return Object.entries(registry)
    .sort(([a], [b]) => a.localeCompare(b))
    .map(([name, kind]) => ({ name, value: kind }));
}
