/**
 * Application shell: builds the panel layout, owns the models, and wires
 * gestures to API calls.
 *
 * Panels: graph editor, live query view, pattern palette, element
 * constraints, database info, result graph, and the matching-record list.
 * All semantics come from the server: the canvas sends its document to
 * translate after every edit (latest-wins), mining runs as a polled job,
 * and Exact Search displays the served result and layout verbatim.
 */

import { ApiClient, ApiError } from "./api.js";
import type { ConnectRequest } from "./api.js";
import { EditorState } from "./editor.js";
import { MetadataPanel } from "./metadata.js";
import { insertPattern, PatternError, PatternPalette } from "./patterns.js";
import { NODE_RADIUS, renderEditorCanvas, renderPatternThumb, renderResultCanvas } from "./render.js";
import { ResultsModel } from "./results.js";
import { TranslationView } from "./translation.js";

export interface AppOptions {
  /** Pattern-job poll period; tests shrink it or call pollPatternsOnce directly. */
  pollIntervalMs?: number;
}

interface NodeDrag {
  nodeId: string;
  originX: number;
  originY: number;
  moved: boolean;
}

interface PanDrag {
  startClientX: number;
  startClientY: number;
  startPanX: number;
  startPanY: number;
  moved: boolean;
}

export class App {
  readonly editor = new EditorState();
  readonly results = new ResultsModel();
  readonly metadata = new MetadataPanel();
  readonly palette = new PatternPalette();
  readonly translation: TranslationView;
  session: string | null = null;

  private readonly pollIntervalMs: number;
  private pollTimer: ReturnType<typeof setInterval> | null = null;
  private executeBusy = false;
  private nodeDrag: NodeDrag | null = null;
  private panDrag: PanDrag | null = null;
  private squelchClick = false;

  // DOM references filled by buildDom
  private editorSvg!: SVGSVGElement;
  private resultSvg!: SVGSVGElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    options: AppOptions = {},
  ) {
    this.pollIntervalMs = options.pollIntervalMs ?? 250;
    this.translation = new TranslationView(api, () => this.session);
    this.buildDom();
    this.wireModels();
    this.wireGestures();
    this.renderEditor();
    this.renderInfo();
    this.renderPalette();
    this.renderResults();
  }

  // -- DOM scaffold -----------------------------------------------------------

  private buildDom(): void {
    this.root.innerHTML = `
      <header class="topbar">
        <h1>querycanvas</h1>
        <span id="session-note" class="session-note">not connected</span>
      </header>
      <div class="columns">
        <aside class="side">
          <section id="connect-panel" class="panel">
            <h2>Database</h2>
            <div class="mode-row">
              <label><input type="radio" name="connect-mode" value="embedded" checked> embedded</label>
              <label><input type="radio" name="connect-mode" value="remote"> remote</label>
            </div>
            <div id="embedded-fields">
              <textarea id="embedded-graph" rows="5" spellcheck="false"
                placeholder='{"nodes": [...], "relationships": [...]}'></textarea>
            </div>
            <div id="remote-fields" hidden>
              <input id="remote-endpoint" placeholder="http://host:7474">
              <input id="remote-user" placeholder="user">
              <input id="remote-password" type="password" placeholder="password">
              <input id="remote-database" placeholder="database (default neo4j)">
            </div>
            <button id="load-database">Load Database</button>
          </section>
          <section id="info-panel" class="panel">
            <h2>Database info</h2>
            <div id="db-info" class="info-body"><p class="hint">connect to see metadata</p></div>
          </section>
          <section id="palette-panel" class="panel">
            <h2>Patterns</h2>
            <div class="pattern-controls">
              <label>k <input id="pattern-k" type="number" min="1" value="3"></label>
              <button id="generate-pattern">Generate Pattern</button>
            </div>
            <div id="pattern-status" class="hint"></div>
            <div id="palette"></div>
          </section>
        </aside>
        <main class="center">
          <section id="editor-panel" class="panel grow">
            <h2>Graph editor</h2>
            <svg id="editor-canvas" class="canvas"></svg>
            <p class="hint">click: add node &middot; drag node onto node: add relationship &middot;
              drag background: pan &middot; scroll: zoom</p>
          </section>
          <section id="query-view-panel" class="panel">
            <h2>Query</h2>
            <div id="translate-error" class="error-banner" hidden></div>
            <pre id="query-text" class="query-text"></pre>
          </section>
        </main>
        <aside class="side">
          <section id="constraints-panel" class="panel">
            <h2>Element</h2>
            <div id="constraints"><p class="hint">select an element</p></div>
          </section>
          <section id="result-panel" class="panel grow">
            <h2>Results</h2>
            <div class="result-controls">
              <button id="exact-search">Exact Search</button>
              <span id="result-note" class="hint"></span>
            </div>
            <svg id="result-canvas" class="canvas"></svg>
          </section>
          <section id="records-panel" class="panel">
            <h2>Matching records</h2>
            <div id="records"></div>
          </section>
        </aside>
      </div>
      <div id="toast" class="toast" hidden></div>
    `;
    this.editorSvg = this.root.querySelector("#editor-canvas") as unknown as SVGSVGElement;
    this.resultSvg = this.root.querySelector("#result-canvas") as unknown as SVGSVGElement;
  }

  private element<T extends Element>(selector: string): T {
    const found = this.root.querySelector(selector);
    if (!found) {
      throw new Error(`missing element: ${selector}`);
    }
    return found as T;
  }

  // -- model wiring ------------------------------------------------------------

  private wireModels(): void {
    this.editor.onDocumentChange(() => {
      this.renderEditor();
      this.renderConstraints();
      void this.translation.request(this.editor.serialize());
    });
    this.editor.onViewChange(() => {
      this.renderEditor();
      this.renderConstraints();
    });
    this.translation.onChange(() => this.renderTranslation());
    this.results.onChange(() => {
      this.renderResults();
      this.renderRecords();
    });
  }

  private wireGestures(): void {
    const connectButton = this.element<HTMLButtonElement>("#load-database");
    connectButton.addEventListener("click", () => void this.connect());
    for (const radio of this.root.querySelectorAll<HTMLInputElement>("input[name=connect-mode]")) {
      radio.addEventListener("change", () => this.syncConnectMode());
    }
    this.element<HTMLButtonElement>("#generate-pattern").addEventListener("click", () =>
      void this.generatePatterns(),
    );
    this.element<HTMLButtonElement>("#exact-search").addEventListener("click", () =>
      void this.exactSearch(),
    );

    const svg = this.editorSvg;
    svg.addEventListener("click", (event) => this.onCanvasClick(event as MouseEvent));
    svg.addEventListener("pointerdown", (event) => this.onCanvasPointerDown(event as PointerEvent));
    svg.addEventListener("pointermove", (event) => this.onPointerMove(event as PointerEvent));
    svg.addEventListener("pointerup", (event) => this.onPointerUp(event as PointerEvent));
    svg.addEventListener("pointerleave", () => this.onPointerCancel());
    svg.addEventListener("wheel", (event) => this.onWheel(event as WheelEvent));
    svg.addEventListener("dragover", (event) => event.preventDefault());
    svg.addEventListener("drop", (event) => this.onPatternDrop(event as DragEvent));

    this.root.addEventListener("keydown", (event) => {
      const key = (event as KeyboardEvent).key;
      const target = event.target as HTMLElement | null;
      const typing = target && ("value" in target || target.isContentEditable);
      if ((key === "Delete" || key === "Backspace") && !typing) {
        this.editor.deleteSelection();
      }
    });
  }

  // -- connection -----------------------------------------------------------------

  private connectMode(): string {
    const radios = this.root.querySelectorAll<HTMLInputElement>("input[name=connect-mode]");
    for (const radio of radios) {
      if (radio.checked) {
        return radio.value;
      }
    }
    return "embedded";
  }

  private connectRequest(): ConnectRequest {
    const mode = this.connectMode();
    const request: ConnectRequest = {};
    if (this.session !== null) {
      request.session = this.session; // reconnect re-binds the same session
    }
    if (mode === "embedded") {
      const raw = this.element<HTMLTextAreaElement>("#embedded-graph").value.trim();
      if (!raw) {
        throw new Error("paste a graph document first");
      }
      request.embedded = { graph: JSON.parse(raw) };
    } else {
      const endpoint = this.element<HTMLInputElement>("#remote-endpoint").value.trim();
      const user = this.element<HTMLInputElement>("#remote-user").value;
      const password = this.element<HTMLInputElement>("#remote-password").value;
      const database = this.element<HTMLInputElement>("#remote-database").value.trim();
      if (!endpoint) {
        throw new Error("remote endpoint is required");
      }
      request.remote = { endpoint, user, password, ...(database ? { database } : {}) };
    }
    return request;
  }

  async connect(): Promise<void> {
    let request: ConnectRequest;
    try {
      request = this.connectRequest();
    } catch (problem) {
      this.toast(problem instanceof Error ? problem.message : String(problem));
      return;
    }
    try {
      const response = await this.api.connect(request);
      this.session = response.session;
      this.metadata.set(response.metadata);
      this.palette.clear();
      this.stopPolling();
      this.setPatternStatus("");
      this.results.clear();
      this.translation.reset();
      this.clearToast();
      this.element<HTMLElement>("#session-note").textContent = `session ${this.session}`;
      this.renderInfo();
      this.renderPalette();
      if (this.editor.nodes.length > 0) {
        await this.translation.request(this.editor.serialize());
      }
    } catch (failure) {
      this.toastError(failure);
    }
  }

  private syncConnectMode(): void {
    const mode = this.connectMode();
    this.element<HTMLElement>("#embedded-fields").hidden = mode !== "embedded";
    this.element<HTMLElement>("#remote-fields").hidden = mode !== "remote";
  }

  // -- pattern mining ----------------------------------------------------------------

  async generatePatterns(): Promise<void> {
    if (this.session === null) {
      this.toast("connect to a database first");
      return;
    }
    const k = Number.parseInt(this.element<HTMLInputElement>("#pattern-k").value, 10) || 0;
    try {
      await this.api.startPatterns(this.session, { k });
      this.setPatternStatus("mining…");
      this.startPolling();
    } catch (failure) {
      this.toastError(failure);
    }
  }

  private startPolling(): void {
    this.stopPolling();
    this.pollTimer = setInterval(() => void this.pollPatternsOnce(), this.pollIntervalMs);
  }

  private stopPolling(): void {
    if (this.pollTimer !== null) {
      clearInterval(this.pollTimer);
      this.pollTimer = null;
    }
  }

  /** One poll step; the interval drives this, tests may call it directly. */
  async pollPatternsOnce(): Promise<void> {
    if (this.session === null) {
      this.stopPolling();
      return;
    }
    try {
      const status = await this.api.pollPatterns(this.session);
      if (status.status === "done") {
        this.stopPolling();
        this.palette.setPatterns(status.patterns);
        this.setPatternStatus(this.palette.coverNote);
        this.renderPalette();
      } else if (status.status === "failed") {
        this.stopPolling();
        this.setPatternStatus("mining failed");
        this.toast(`pattern mining failed: ${status.error.error.message}`);
      } else if (status.status === "none") {
        this.stopPolling();
        this.setPatternStatus("");
      }
    } catch (failure) {
      this.stopPolling();
      this.toastError(failure);
    }
  }

  private setPatternStatus(text: string): void {
    this.element<HTMLElement>("#pattern-status").textContent = text;
  }

  // -- pattern drop --------------------------------------------------------------------

  private onPatternDrop(event: DragEvent): void {
    event.preventDefault();
    const raw = event.dataTransfer?.getData("application/x-pattern-index");
    if (!raw) {
      return;
    }
    const world = this.toWorld(event.clientX, event.clientY);
    this.dropPatternAt(Number.parseInt(raw, 10), world.x, world.y);
  }

  /** Insert palette pattern `index` at canvas point (x, y); node under the point anchors. */
  dropPatternAt(index: number, x: number, y: number): void {
    const member = this.palette.get(index);
    if (!member) {
      return;
    }
    const anchor = this.nodeAt(x, y)?.id ?? null;
    try {
      const merged = insertPattern(this.editor.serialize(), member.graph, anchor);
      this.editor.applyDocument(merged, { x, y });
      this.clearToast();
    } catch (failure) {
      if (failure instanceof PatternError) {
        this.toast(failure.message); // rejected: canvas unchanged
      } else {
        throw failure;
      }
    }
  }

  // -- execute ---------------------------------------------------------------------------

  async exactSearch(): Promise<void> {
    if (this.session === null) {
      this.toast("connect to a database first");
      return;
    }
    if (this.executeBusy) {
      return;
    }
    this.executeBusy = true;
    try {
      const response = await this.api.execute(this.session);
      this.results.setResult(response.result, response.layout);
      this.clearToast();
    } catch (failure) {
      this.toastError(failure);
    } finally {
      this.executeBusy = false;
    }
  }

  /** Record click: highlight exactly that record's elements and center on them. */
  clickRecord(index: number): void {
    this.results.selectRecord(index);
  }

  // -- editor gestures ------------------------------------------------------------------------

  private toWorld(clientX: number, clientY: number): { x: number; y: number } {
    const rect = this.editorSvg.getBoundingClientRect();
    const { panX, panY, zoom } = this.editor.viewport;
    return {
      x: (clientX - rect.left - panX) / zoom,
      y: (clientY - rect.top - panY) / zoom,
    };
  }

  private nodeAt(x: number, y: number, except?: string) {
    return this.editor.nodes.find(
      (node) => node.id !== except && Math.hypot(node.x - x, node.y - y) <= NODE_RADIUS,
    );
  }

  private onCanvasClick(event: MouseEvent): void {
    if (this.squelchClick) {
      this.squelchClick = false;
      return;
    }
    const world = this.toWorld(event.clientX, event.clientY);
    if (this.nodeAt(world.x, world.y)) {
      return; // clicks on elements are handled by their own targets
    }
    if (this.editor.selection.size > 0) {
      this.editor.clearSelection();
      return;
    }
    this.editor.addNodeAt(world.x, world.y);
  }

  private onNodePointerDown(id: string, event: PointerEvent): void {
    const node = this.editor.node(id);
    if (!node) {
      return;
    }
    this.squelchClick = false;
    this.nodeDrag = { nodeId: id, originX: node.x, originY: node.y, moved: false };
    event.preventDefault?.();
  }

  private onCanvasPointerDown(event: PointerEvent): void {
    this.squelchClick = false;
    const world = this.toWorld(event.clientX, event.clientY);
    if (this.nodeAt(world.x, world.y)) {
      return; // the node's own handler starts a node drag
    }
    this.panDrag = {
      startClientX: event.clientX,
      startClientY: event.clientY,
      startPanX: this.editor.viewport.panX,
      startPanY: this.editor.viewport.panY,
      moved: false,
    };
  }

  private onPointerMove(event: PointerEvent): void {
    if (this.nodeDrag) {
      const world = this.toWorld(event.clientX, event.clientY);
      const drag = this.nodeDrag;
      if (!drag.moved && Math.hypot(world.x - drag.originX, world.y - drag.originY) > 3) {
        drag.moved = true;
      }
      if (drag.moved) {
        this.editor.moveNode(drag.nodeId, world.x, world.y);
      }
      return;
    }
    if (this.panDrag) {
      const drag = this.panDrag;
      const dx = event.clientX - drag.startClientX;
      const dy = event.clientY - drag.startClientY;
      if (!drag.moved && Math.hypot(dx, dy) > 3) {
        drag.moved = true;
      }
      if (drag.moved) {
        this.editor.setViewport({
          ...this.editor.viewport,
          panX: drag.startPanX + dx,
          panY: drag.startPanY + dy,
        });
      }
    }
  }

  private onPointerUp(event: PointerEvent): void {
    if (this.nodeDrag) {
      const drag = this.nodeDrag;
      this.nodeDrag = null;
      const world = this.toWorld(event.clientX, event.clientY);
      const target = this.nodeAt(world.x, world.y, drag.nodeId);
      if (drag.moved) {
        this.squelchClick = true;
        if (target) {
          // released on another node: this drag means "relate", not "move"
          this.editor.moveNode(drag.nodeId, drag.originX, drag.originY);
          this.editor.addRelation(drag.nodeId, target.id);
        }
      }
      return;
    }
    if (this.panDrag) {
      if (this.panDrag.moved) {
        this.squelchClick = true;
      }
      this.panDrag = null;
    }
  }

  private onPointerCancel(): void {
    if (this.nodeDrag?.moved || this.panDrag?.moved) {
      this.squelchClick = true;
    }
    this.nodeDrag = null;
    this.panDrag = null;
  }

  private onWheel(event: WheelEvent): void {
    event.preventDefault();
    const { panX, panY, zoom } = this.editor.viewport;
    const factor = event.deltaY < 0 ? 1.1 : 1 / 1.1;
    const next = Math.min(4, Math.max(0.25, zoom * factor));
    if (next === zoom) {
      return;
    }
    const rect = this.editorSvg.getBoundingClientRect();
    const px = event.clientX - rect.left;
    const py = event.clientY - rect.top;
    // keep the point under the cursor fixed while zooming
    this.editor.setViewport({
      panX: px - ((px - panX) / zoom) * next,
      panY: py - ((py - panY) / zoom) * next,
      zoom: next,
    });
  }

  // -- rendering ------------------------------------------------------------------------------

  private renderEditor(): void {
    renderEditorCanvas(this.editorSvg, this.editor, {
      onNodePointerDown: (id, event) => this.onNodePointerDown(id, event),
      onElementClick: (id, event) => this.editor.select(id, event.shiftKey),
    });
  }

  private renderTranslation(): void {
    this.element<HTMLElement>("#query-text").textContent = this.translation.text;
    const banner = this.element<HTMLElement>("#translate-error");
    if (this.translation.error) {
      banner.hidden = false;
      banner.textContent = `${this.translation.error.code}: ${this.translation.error.message}`;
    } else {
      banner.hidden = true;
      banner.textContent = "";
    }
  }

  private renderInfo(): void {
    const body = this.element<HTMLElement>("#db-info");
    if (!this.metadata.hasMetadata()) {
      body.innerHTML = '<p class="hint">connect to see metadata</p>';
      return;
    }
    const section = (title: string, rows: { name: string; value: string }[]): string => {
      if (rows.length === 0) {
        return "";
      }
      const items = rows
        .map((row) => `<tr><td>${escapeHtml(row.name)}</td><td>${escapeHtml(row.value)}</td></tr>`)
        .join("");
      return `<h3>${title}</h3><table>${items}</table>`;
    };
    body.innerHTML =
      section("Totals", this.metadata.totals()) +
      section("Labels", this.metadata.labelRows()) +
      section("Relationship types", this.metadata.typeRows()) +
      section("Node properties", this.metadata.nodePropertyRows()) +
      section("Relationship properties", this.metadata.relPropertyRows()) +
      `<p class="hint">${escapeHtml(this.metadata.schemaSummary())}</p>`;
  }

  private renderPalette(): void {
    const palette = this.element<HTMLElement>("#palette");
    palette.innerHTML = "";
    for (const entry of this.palette.entries()) {
      const card = document.createElement("div");
      card.className = "palette-entry";
      card.setAttribute("draggable", "true");
      card.dataset.patternIndex = String(entry.index);
      card.addEventListener("dragstart", (event) => {
        (event as DragEvent).dataTransfer?.setData(
          "application/x-pattern-index",
          String(entry.index),
        );
      });
      card.appendChild(renderPatternThumb(entry.member));
      const caption = document.createElement("div");
      caption.className = "palette-caption";
      caption.textContent = entry.caption;
      card.appendChild(caption);
      palette.appendChild(card);
    }
  }

  private renderConstraints(): void {
    const body = this.element<HTMLElement>("#constraints");
    body.innerHTML = "";
    const selected = [...this.editor.selection];
    if (selected.length === 0) {
      body.innerHTML = '<p class="hint">select an element</p>';
      return;
    }
    if (selected.length > 1) {
      const note = document.createElement("p");
      note.className = "hint";
      note.textContent = `${selected.length} elements selected`;
      body.appendChild(note);
      body.appendChild(this.deleteButton());
      return;
    }
    const id = selected[0]!;
    const node = this.editor.node(id);
    const rel = this.editor.rel(id);
    if (node) {
      body.appendChild(this.textField("label", node.label ?? "", (value) =>
        this.editor.setLabel(id, value.trim() === "" ? null : value.trim()),
      ));
      body.appendChild(this.propertyEditor(id, node.properties));
    } else if (rel) {
      body.appendChild(this.textField("type", rel.type ?? "", (value) =>
        this.editor.setType(id, value.trim() === "" ? null : value.trim()),
      ));
      body.appendChild(this.directedToggle(id, rel.directed));
      body.appendChild(this.propertyEditor(id, rel.properties));
    } else {
      return;
    }
    body.appendChild(this.deleteButton());
  }

  private textField(name: string, value: string, apply: (value: string) => void): HTMLElement {
    const row = document.createElement("label");
    row.className = "field";
    row.textContent = name + " ";
    const input = document.createElement("input");
    input.value = value;
    input.dataset.field = name;
    input.addEventListener("change", () => apply(input.value));
    row.appendChild(input);
    return row;
  }

  private directedToggle(relId: string, directed: boolean): HTMLElement {
    const row = document.createElement("label");
    row.className = "field";
    const input = document.createElement("input");
    input.type = "checkbox";
    input.checked = directed;
    input.dataset.field = "directed";
    input.addEventListener("change", () => this.editor.setDirected(relId, input.checked));
    row.appendChild(input);
    row.appendChild(document.createTextNode(" directed"));
    return row;
  }

  private propertyEditor(
    elementId: string,
    properties: Record<string, unknown>,
  ): HTMLElement {
    const wrap = document.createElement("div");
    wrap.className = "properties";
    const heading = document.createElement("h3");
    heading.textContent = "Properties";
    wrap.appendChild(heading);
    for (const [key, value] of Object.entries(properties)) {
      const row = document.createElement("div");
      row.className = "property-row";
      const text = document.createElement("span");
      text.textContent = `${key} = ${JSON.stringify(value)}`;
      row.appendChild(text);
      const remove = document.createElement("button");
      remove.textContent = "×";
      remove.dataset.removeProperty = key;
      remove.addEventListener("click", () => this.editor.removeProperty(elementId, key));
      row.appendChild(remove);
      wrap.appendChild(row);
    }
    const adder = document.createElement("div");
    adder.className = "property-add";
    const keyInput = document.createElement("input");
    keyInput.placeholder = "key";
    keyInput.dataset.field = "property-key";
    const valueInput = document.createElement("input");
    valueInput.placeholder = "value";
    valueInput.dataset.field = "property-value";
    const add = document.createElement("button");
    add.textContent = "add";
    add.dataset.action = "add-property";
    add.addEventListener("click", () => {
      const key = keyInput.value.trim();
      if (!key) {
        return;
      }
      this.editor.setProperty(elementId, key, parseScalar(valueInput.value));
    });
    adder.append(keyInput, valueInput, add);
    wrap.appendChild(adder);
    return wrap;
  }

  private deleteButton(): HTMLElement {
    const button = document.createElement("button");
    button.textContent = "Delete selection";
    button.dataset.action = "delete-selection";
    button.addEventListener("click", () => this.editor.deleteSelection());
    return button;
  }

  private renderResults(): void {
    renderResultCanvas(this.resultSvg, this.results);
    const note = this.element<HTMLElement>("#result-note");
    if (!this.results.hasResult()) {
      note.textContent = "";
      return;
    }
    const n = this.results.recordCount();
    const pruned = this.results.prunedNote();
    note.textContent = `${n} record${n === 1 ? "" : "s"}${pruned ? ` — ${pruned}` : ""}`;
  }

  private renderRecords(): void {
    const container = this.element<HTMLElement>("#records");
    container.innerHTML = "";
    if (!this.results.hasResult()) {
      container.innerHTML = '<p class="hint">run Exact Search to list matches</p>';
      return;
    }
    const records = this.results.records();
    if (records.length === 0) {
      container.innerHTML = '<p class="hint">no matching records</p>';
      return;
    }
    const table = document.createElement("table");
    table.className = "records-table";
    const header = document.createElement("tr");
    const indexHead = document.createElement("th");
    indexHead.textContent = "#";
    header.appendChild(indexHead);
    const variables = this.results.variables();
    for (const variable of variables) {
      const th = document.createElement("th");
      th.textContent = variable.name;
      th.title = variable.kind;
      header.appendChild(th);
    }
    table.appendChild(header);
    records.forEach((record, index) => {
      const row = document.createElement("tr");
      row.dataset.recordIndex = String(index);
      if (index === this.results.selectedRecord) {
        row.className = "selected";
      }
      const indexCell = document.createElement("td");
      indexCell.textContent = String(index);
      row.appendChild(indexCell);
      for (const variable of variables) {
        const cell = document.createElement("td");
        cell.textContent = record[variable.name] ?? "";
        row.appendChild(cell);
      }
      row.addEventListener("click", () => this.clickRecord(index));
      table.appendChild(row);
    });
    container.appendChild(table);
  }

  // -- feedback ----------------------------------------------------------------------------------

  toast(message: string): void {
    const toast = this.element<HTMLElement>("#toast");
    toast.textContent = message;
    toast.hidden = false;
  }

  private clearToast(): void {
    const toast = this.element<HTMLElement>("#toast");
    toast.textContent = "";
    toast.hidden = true;
  }

  private toastError(failure: unknown): void {
    if (failure instanceof ApiError) {
      this.toast(`${failure.code}: ${failure.message}`);
    } else {
      this.toast(String(failure));
    }
  }
}

function parseScalar(raw: string): boolean | number | string {
  const text = raw.trim();
  if (text === "true") {
    return true;
  }
  if (text === "false") {
    return false;
  }
  if (text !== "" && Number.isFinite(Number(text))) {
    return Number(text);
  }
  return raw;
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
