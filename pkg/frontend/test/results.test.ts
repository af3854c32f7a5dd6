import { describe, expect, it } from "vitest";

import type { ExecuteResponse, ResultSetDocument } from "../src/documents.js";
import { ResultsModel } from "../src/results.js";
import rawSnapshots from "./fixtures/api_snapshots.json";

const snapshots = rawSnapshots as unknown as {
  execute_star_edge: ExecuteResponse;
  execute_acted_in: ExecuteResponse;
};

function starModel(): ResultsModel {
  const model = new ResultsModel();
  const star = snapshots.execute_star_edge;
  model.setResult(star.result, star.layout);
  return model;
}

describe("result graph joins distinct elements with served positions", () => {
  it("renders the star hub exactly once despite 10 records touching it", () => {
    const model = starModel();
    expect(model.recordCount()).toBe(10);
    const nodes = model.renderNodes();
    expect(nodes.filter((n) => n.id === "c")).toHaveLength(1);
    expect(nodes).toHaveLength(6);
    expect(new Set(nodes.map((n) => n.id)).size).toBe(6);
  });

  it("uses the served coordinates verbatim", () => {
    const model = starModel();
    const served = new Map(
      snapshots.execute_star_edge.layout.positions.map((p) => [p.id, p]),
    );
    for (const node of model.renderNodes()) {
      const spot = served.get(node.id);
      expect(spot).toBeDefined();
      expect(node.x).toBe(spot!.x);
      expect(node.y).toBe(spot!.y);
    }
  });

  it("renders one edge per distinct relationship", () => {
    const model = starModel();
    const edges = model.renderEdges();
    expect(edges).toHaveLength(5);
    expect(new Set(edges.map((e) => e.id)).size).toBe(5);
    for (const edge of edges) {
      expect(edge.type).toBe("SPOKE");
      expect(edge.selfLoop).toBe(false);
    }
  });
});

describe("record-click highlighting", () => {
  it("highlights exactly the elements in the record's reference list", () => {
    const model = starModel();
    const records = snapshots.execute_star_edge.result.reference_list;
    records.forEach((record, index) => {
      model.selectRecord(index);
      expect(model.selectedRecord).toBe(index);
      expect(model.highlighted).toEqual(new Set(Object.values(record)));
    });
  });

  it("clears on demand and ignores out-of-range picks", () => {
    const model = starModel();
    model.selectRecord(2);
    expect(model.highlighted.size).toBeGreaterThan(0);
    model.selectRecord(99);
    expect(model.selectedRecord).toBe(2);
    model.selectRecord(-1);
    expect(model.selectedRecord).toBe(2);
    model.clearRecordSelection();
    expect(model.selectedRecord).toBeNull();
    expect(model.highlighted.size).toBe(0);
  });

  it("centers on the highlighted nodes", () => {
    const model = starModel();
    model.selectRecord(0);
    const record = snapshots.execute_star_edge.result.reference_list[0]!;
    const nodes = model
      .renderNodes()
      .filter((n) => n.id === record["n1"] || n.id === record["n2"]);
    const centroid = model.highlightCentroid()!;
    expect(centroid.x).toBeCloseTo((nodes[0]!.x + nodes[1]!.x) / 2, 12);
    expect(centroid.y).toBeCloseTo((nodes[0]!.y + nodes[1]!.y) / 2, 12);
  });
});

describe("edge cases", () => {
  it("an empty result renders an empty canvas and list", () => {
    const model = new ResultsModel();
    const empty: ResultSetDocument = {
      variables: { n1: "node" },
      reference_list: [],
      distinct_nodes: {},
      distinct_rels: {},
    };
    model.setResult(empty, { positions: [], pruned: { self_loops: 0, parallel: 0 } });
    expect(model.recordCount()).toBe(0);
    expect(model.renderNodes()).toEqual([]);
    expect(model.renderEdges()).toEqual([]);
    expect(model.highlightCentroid()).toBeNull();
  });

  it("spreads parallel relationships over distinct curvature slots", () => {
    const model = new ResultsModel();
    const result: ResultSetDocument = {
      variables: { r1: "relationship" },
      reference_list: [{ r1: "p" }, { r1: "q" }, { r1: "loop" }],
      distinct_nodes: {
        u: { labels: [], properties: {} },
        v: { labels: [], properties: {} },
      },
      distinct_rels: {
        p: { type: "T", source: "u", target: "v", properties: {} },
        q: { type: "T", source: "v", target: "u", properties: {} },
        loop: { type: "L", source: "u", target: "u", properties: {} },
      },
    };
    model.setResult(result, {
      positions: [
        { id: "u", x: -1, y: 0 },
        { id: "v", x: 1, y: 0 },
      ],
      pruned: { self_loops: 1, parallel: 1 },
    });
    const edges = model.renderEdges();
    const pair = edges.filter((e) => !e.selfLoop);
    expect(pair.map((e) => e.curve).sort()).toEqual([-1, 1]);
    const loop = edges.find((e) => e.selfLoop)!;
    expect(loop.id).toBe("loop");
    expect(model.prunedNote()).toContain("1 self-loop");
    expect(model.prunedNote()).toContain("1 parallel");
  });

  it("orders variables node-first for the record table", () => {
    const model = starModel();
    expect(model.variables()).toEqual([
      { name: "n1", kind: "node" },
      { name: "n2", kind: "node" },
      { name: "r1", kind: "relationship" },
    ]);
  });

  it("notifies listeners on selection and result changes", () => {
    const model = new ResultsModel();
    let events = 0;
    model.onChange(() => {
      events += 1;
    });
    const star = snapshots.execute_star_edge;
    model.setResult(star.result, star.layout);
    model.selectRecord(1);
    model.clearRecordSelection();
    model.clear();
    expect(events).toBe(4);
    expect(model.hasResult()).toBe(false);
  });
});
