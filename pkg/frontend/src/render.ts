/**
 * SVG builders for the two graph canvases and the pattern thumbnails.
 *
 * Pure DOM construction: each function clears its target and redraws from
 * the model. Parallel relationships bow apart over curvature slots, self
 * loops draw as a lobe above the node, and directed relationships carry an
 * arrowhead.
 */

import type { PatternDocument } from "./documents.js";
import type { EditorNode, EditorRel, EditorState } from "./editor.js";
import type { RenderEdge, RenderNode, ResultsModel } from "./results.js";

const SVG_NS = "http://www.w3.org/2000/svg";
export const NODE_RADIUS = 22;

export function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const element = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) {
    element.setAttribute(name, value);
  }
  return element;
}

function clear(element: Element): void {
  while (element.firstChild) {
    element.removeChild(element.firstChild);
  }
}

function arrowMarker(id: string): SVGMarkerElement {
  const marker = svgElement("marker", {
    id,
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgElement("path", { d: "M 0 0 L 10 5 L 0 10 z", class: "arrow-head" }));
  return marker;
}

/** Path between two points bowed by the curve slot (0 = straight line). */
function edgePath(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  curve: number,
  bow: number,
): string {
  if (curve === 0) {
    return `M ${x1} ${y1} L ${x2} ${y2}`;
  }
  const mx = (x1 + x2) / 2;
  const my = (y1 + y2) / 2;
  const dx = x2 - x1;
  const dy = y2 - y1;
  const span = Math.hypot(dx, dy) || 1;
  const cx = mx - (dy / span) * bow * curve;
  const cy = my + (dx / span) * bow * curve;
  return `M ${x1} ${y1} Q ${cx} ${cy} ${x2} ${y2}`;
}

function selfLoopPath(x: number, y: number, radius: number, slot: number): string {
  const lift = radius * (2.2 + 0.8 * Math.abs(slot));
  return (
    `M ${x - radius * 0.6} ${y - radius * 0.8} ` +
    `C ${x - radius * 1.4} ${y - lift}, ${x + radius * 1.4} ${y - lift}, ` +
    `${x + radius * 0.6} ${y - radius * 0.8}`
  );
}

// -- editor canvas ----------------------------------------------------------

export interface EditorHandlers {
  onNodePointerDown(id: string, event: PointerEvent): void;
  onElementClick(id: string, event: MouseEvent): void;
}

export function renderEditorCanvas(
  svg: SVGSVGElement,
  state: EditorState,
  handlers: EditorHandlers,
): void {
  clear(svg);
  const defs = svgElement("defs");
  defs.appendChild(arrowMarker("editor-arrow"));
  svg.appendChild(defs);

  const { panX, panY, zoom } = state.viewport;
  const world = svgElement("g", {
    transform: `translate(${panX} ${panY}) scale(${zoom})`,
    "data-role": "world",
  });
  svg.appendChild(world);

  const byId = new Map(state.nodes.map((n) => [n.id, n]));
  for (const rel of withCurves(state.rels)) {
    world.appendChild(editorEdge(rel, byId, state, handlers));
  }
  for (const node of state.nodes) {
    world.appendChild(editorNode(node, state, handlers));
  }
}

interface CurvedRel extends EditorRel {
  curve: number;
}

function withCurves(rels: readonly EditorRel[]): CurvedRel[] {
  const groups = new Map<string, EditorRel[]>();
  for (const rel of rels) {
    const key = rel.source <= rel.target ? `${rel.source}|${rel.target}` : `${rel.target}|${rel.source}`;
    const group = groups.get(key);
    if (group) {
      group.push(rel);
    } else {
      groups.set(key, [rel]);
    }
  }
  const curveFor = new Map<string, number>();
  for (const group of groups.values()) {
    group.forEach((rel, index) => {
      curveFor.set(rel.id, slotFor(index, group.length));
    });
  }
  return rels.map((rel) => ({ ...rel, curve: curveFor.get(rel.id) ?? 0 }));
}

function slotFor(index: number, groupSize: number): number {
  if (groupSize === 1) {
    return 0;
  }
  const even = groupSize % 2 === 0;
  if (!even && index === 0) {
    return 0;
  }
  const shifted = even ? index + 1 : index;
  const step = Math.ceil(shifted / 2);
  return shifted % 2 === 1 ? step : -step;
}

function editorEdge(
  rel: CurvedRel,
  nodes: Map<string, EditorNode>,
  state: EditorState,
  handlers: EditorHandlers,
): SVGGElement {
  const group = svgElement("g", { "data-rel": rel.id });
  const source = nodes.get(rel.source);
  const target = nodes.get(rel.target);
  if (!source || !target) {
    return group;
  }
  const selected = state.selection.has(rel.id);
  const d =
    rel.source === rel.target
      ? selfLoopPath(source.x, source.y, NODE_RADIUS, rel.curve)
      : edgePath(source.x, source.y, target.x, target.y, rel.curve, 36);
  const path = svgElement("path", {
    d,
    class: `edge${selected ? " selected" : ""}`,
    "data-rel": rel.id,
  });
  if (rel.directed) {
    path.setAttribute("marker-end", "url(#editor-arrow)");
  }
  path.addEventListener("click", (event) => {
    event.stopPropagation();
    handlers.onElementClick(rel.id, event);
  });
  group.appendChild(path);

  const caption = rel.type ?? "";
  if (caption) {
    const mx = (source.x + target.x) / 2;
    const my = (source.y + target.y) / 2 - 6 - 10 * rel.curve;
    const text = svgElement("text", {
      x: String(rel.source === rel.target ? source.x : mx),
      y: String(rel.source === rel.target ? source.y - NODE_RADIUS * 2.6 : my),
      class: "edge-caption",
    });
    text.textContent = caption;
    group.appendChild(text);
  }
  return group;
}

function editorNode(node: EditorNode, state: EditorState, handlers: EditorHandlers): SVGGElement {
  const selected = state.selection.has(node.id);
  const group = svgElement("g", {
    transform: `translate(${node.x} ${node.y})`,
    "data-node": node.id,
    class: `node${selected ? " selected" : ""}`,
  });
  group.appendChild(svgElement("circle", { r: String(NODE_RADIUS) }));
  const propertyCount = Object.keys(node.properties).length;
  const caption = svgElement("text", { class: "node-caption", dy: "4" });
  caption.textContent = node.label ?? "?";
  group.appendChild(caption);
  const idText = svgElement("text", { class: "node-id", dy: String(NODE_RADIUS + 13) });
  idText.textContent = propertyCount > 0 ? `${node.id} {${propertyCount}}` : node.id;
  group.appendChild(idText);

  group.addEventListener("pointerdown", (event) => {
    event.stopPropagation();
    handlers.onNodePointerDown(node.id, event as PointerEvent);
  });
  group.addEventListener("click", (event) => {
    event.stopPropagation();
    handlers.onElementClick(node.id, event);
  });
  return group;
}

// -- result canvas ------------------------------------------------------------

export function renderResultCanvas(svg: SVGSVGElement, model: ResultsModel): void {
  clear(svg);
  const nodes = model.renderNodes();
  const edges = model.renderEdges();
  if (nodes.length === 0) {
    svg.removeAttribute("viewBox");
    return;
  }

  const defs = svgElement("defs");
  defs.appendChild(arrowMarker("result-arrow"));
  svg.appendChild(defs);

  const frame = fitFrame(nodes);
  svg.setAttribute("viewBox", viewBoxFor(frame, model));

  const byId = new Map(nodes.map((n) => [n.id, n]));
  const world = svgElement("g", { "data-role": "result-world" });
  svg.appendChild(world);

  for (const edge of edges) {
    world.appendChild(resultEdge(edge, byId, frame, model));
  }
  for (const node of nodes) {
    world.appendChild(resultNode(node, frame, model));
  }
}

interface Frame {
  scale: number;
  offsetX: number;
  offsetY: number;
  width: number;
  height: number;
}

/** Maps layout coordinates into a fixed drawing frame with padding. */
function fitFrame(nodes: readonly RenderNode[]): Frame {
  const width = 640;
  const height = 440;
  const pad = 50;
  const xs = nodes.map((n) => n.x);
  const ys = nodes.map((n) => n.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * pad) / spanX, (height - 2 * pad) / spanY);
  return {
    scale,
    offsetX: pad + ((width - 2 * pad) - spanX * scale) / 2 - minX * scale,
    offsetY: pad + ((height - 2 * pad) - spanY * scale) / 2 - minY * scale,
    width,
    height,
  };
}

function place(frame: Frame, x: number, y: number): { x: number; y: number } {
  return { x: x * frame.scale + frame.offsetX, y: y * frame.scale + frame.offsetY };
}

function viewBoxFor(frame: Frame, model: ResultsModel): string {
  const centroid = model.highlightCentroid();
  if (model.selectedRecord !== null && centroid !== null) {
    const c = place(frame, centroid.x, centroid.y);
    return `${c.x - frame.width / 2} ${c.y - frame.height / 2} ${frame.width} ${frame.height}`;
  }
  return `0 0 ${frame.width} ${frame.height}`;
}

const RESULT_RADIUS = 16;

function resultEdge(
  edge: RenderEdge,
  nodes: Map<string, RenderNode>,
  frame: Frame,
  model: ResultsModel,
): SVGGElement {
  const group = svgElement("g", { "data-result-rel": edge.id });
  const source = nodes.get(edge.source);
  const target = nodes.get(edge.target);
  if (!source || !target) {
    return group;
  }
  const a = place(frame, source.x, source.y);
  const b = place(frame, target.x, target.y);
  const highlighted = model.isHighlighted(edge.id);
  const d = edge.selfLoop
    ? selfLoopPath(a.x, a.y, RESULT_RADIUS, edge.curve)
    : edgePath(a.x, a.y, b.x, b.y, edge.curve, 26);
  const path = svgElement("path", {
    d,
    class: `edge${highlighted ? " highlighted" : ""}`,
    "data-result-rel": edge.id,
    "marker-end": "url(#result-arrow)",
  });
  group.appendChild(path);
  const text = svgElement("text", {
    x: String((a.x + b.x) / 2),
    y: String(edge.selfLoop ? a.y - RESULT_RADIUS * 3 : (a.y + b.y) / 2 - 5 - 9 * edge.curve),
    class: "edge-caption",
  });
  text.textContent = edge.type;
  group.appendChild(text);
  return group;
}

function resultNode(node: RenderNode, frame: Frame, model: ResultsModel): SVGGElement {
  const spot = place(frame, node.x, node.y);
  const highlighted = model.isHighlighted(node.id);
  const group = svgElement("g", {
    transform: `translate(${spot.x} ${spot.y})`,
    "data-result-node": node.id,
    class: `node${highlighted ? " highlighted" : ""}`,
  });
  group.appendChild(svgElement("circle", { r: String(RESULT_RADIUS) }));
  const caption = svgElement("text", { class: "node-caption", dy: "4" });
  caption.textContent = node.labels[0] ?? node.id;
  group.appendChild(caption);
  const idText = svgElement("text", { class: "node-id", dy: String(RESULT_RADIUS + 11) });
  idText.textContent = node.id;
  group.appendChild(idText);
  group.appendChild(titleFor(node));
  return group;
}

function titleFor(node: RenderNode): SVGTitleElement {
  const title = svgElement("title");
  const labels = node.labels.length > 0 ? node.labels.join(":") : "(no label)";
  const props = Object.entries(node.properties)
    .map(([key, value]) => `${key}: ${JSON.stringify(value)}`)
    .join(", ");
  title.textContent = props ? `${labels} {${props}}` : labels;
  return title;
}

// -- pattern thumbnails ----------------------------------------------------------

/** Small preview of a mined shape for the palette; ring layout, no physics. */
export function renderPatternThumb(member: PatternDocument): SVGSVGElement {
  const size = 96;
  const svg = svgElement("svg", {
    viewBox: `0 0 ${size} ${size}`,
    class: "pattern-thumb",
    width: String(size),
    height: String(size),
  });
  const nodes = member.graph.nodes;
  const spots = new Map<string, { x: number; y: number }>();
  const cx = size / 2;
  const cy = size / 2;
  const radius = nodes.length === 1 ? 0 : size * 0.32;
  nodes.forEach((node, index) => {
    const angle = (2 * Math.PI * index) / nodes.length - Math.PI / 2;
    spots.set(node.id, { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  });
  for (const rel of member.graph.relationships) {
    const a = spots.get(rel.source);
    const b = spots.get(rel.target);
    if (!a || !b) {
      continue;
    }
    const d =
      rel.source === rel.target
        ? selfLoopPath(a.x, a.y, 8, 0)
        : edgePath(a.x, a.y, b.x, b.y, 0, 0);
    svg.appendChild(svgElement("path", { d, class: "edge" }));
  }
  for (const node of nodes) {
    const spot = spots.get(node.id)!;
    const group = svgElement("g", { transform: `translate(${spot.x} ${spot.y})` });
    group.appendChild(svgElement("circle", { r: "9", class: "thumb-node" }));
    if (node.label) {
      const text = svgElement("text", { class: "thumb-caption", dy: "-13" });
      text.textContent = node.label;
      group.appendChild(text);
    }
    svg.appendChild(group);
  }
  return svg;
}
