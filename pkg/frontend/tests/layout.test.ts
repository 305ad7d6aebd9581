import { describe, expect, it } from "vitest";

import { layoutGraph, MARGIN, rankNodes } from "../src/layout.js";
import type { GraphSnapshot } from "../src/types.js";

// the taxonomy after the twelve-input document session
const DMA_SNAPSHOT: GraphSnapshot = {
  mode: "DMA",
  nodes: [
    ...["ArtificialIntelligence", "ComputerScience", "Engineering", "History",
        "Philosophy", "Science", "TopLevel"].map(
      (id) => ({ id, kind: "category" as const })),
    ...["Doc1", "Doc2", "Doc3"].map((id) => ({ id, kind: "document" as const })),
  ],
  links: [
    { source: "Doc1", target: "Science", kind: "element" },
    { source: "Doc1", target: "Engineering", kind: "element" },
    { source: "Doc2", target: "ArtificialIntelligence", kind: "element" },
    { source: "Doc3", target: "Philosophy", kind: "element" },
    { source: "Science", target: "TopLevel", kind: "subclass" },
    { source: "Engineering", target: "TopLevel", kind: "subclass" },
    { source: "History", target: "TopLevel", kind: "subclass" },
    { source: "ComputerScience", target: "Science", kind: "subclass" },
    { source: "ComputerScience", target: "Engineering", kind: "subclass" },
    { source: "Philosophy", target: "History", kind: "subclass" },
    { source: "ArtificialIntelligence", target: "ComputerScience", kind: "subclass" },
    { source: "Engineering", target: "History", kind: "disjoint" },
  ],
};

const MIS_SNAPSHOT: GraphSnapshot = {
  mode: "MIS",
  nodes: [
    { id: "B", kind: "kind" },
    { id: "P", kind: "kind" },
    { id: "CF#1", kind: "property", property: "CF", negated: false, occurrence: 1 },
    { id: "~CF#2", kind: "property", property: "CF", negated: true, occurrence: 2 },
    { id: "Tweety", kind: "object" },
    { id: "Opus", kind: "object" },
  ],
  links: [
    { source: "P", target: "B", kind: "subkind" },
    { source: "B", target: "CF#1", kind: "hasProperty" },
    { source: "P", target: "~CF#2", kind: "hasProperty" },
    { source: "Tweety", target: "B", kind: "objectKind" },
    { source: "Opus", target: "P", kind: "objectKind" },
  ],
};

function placed(layout: ReturnType<typeof layoutGraph>, id: string) {
  const n = layout.nodes.find((n) => n.id === id);
  expect(n, `node ${id} placed`).toBeDefined();
  return n!;
}

describe("rankNodes", () => {
  it("puts roots on row zero and ranks by longest upward path", () => {
    const rows = rankNodes(DMA_SNAPSHOT.nodes, DMA_SNAPSHOT.links);
    expect(rows.get("TopLevel")).toBe(0);
    expect(rows.get("Science")).toBe(1);
    expect(rows.get("History")).toBe(1);
    expect(rows.get("ComputerScience")).toBe(2);
    expect(rows.get("ArtificialIntelligence")).toBe(3);
    // longest path wins even though Philosophy is also directly under a row-1 node
    expect(rows.get("Philosophy")).toBe(2);
  });

  it("pins documents to one shared bottom row", () => {
    const rows = rankNodes(DMA_SNAPSHOT.nodes, DMA_SNAPSHOT.links);
    const bottom = Math.max(...[...rows.values()]);
    expect(rows.get("Doc1")).toBe(bottom);
    expect(rows.get("Doc2")).toBe(bottom);
    expect(rows.get("Doc3")).toBe(bottom);
    expect(bottom).toBe(4);
  });

  it("ignores disjoint links when ranking", () => {
    const without = rankNodes(DMA_SNAPSHOT.nodes,
      DMA_SNAPSHOT.links.filter((l) => l.kind !== "disjoint"));
    const withAll = rankNodes(DMA_SNAPSHOT.nodes, DMA_SNAPSHOT.links);
    expect(withAll).toEqual(without);
  });

  it("survives a cyclic payload instead of hanging", () => {
    const rows = rankNodes(
      [{ id: "A", kind: "category" }, { id: "B", kind: "category" }],
      [{ source: "A", target: "B", kind: "subclass" },
       { source: "B", target: "A", kind: "subclass" }]);
    expect(rows.size).toBe(2);
  });
});

describe("layoutGraph", () => {
  it("places every hierarchy edge pointing upward on the page", () => {
    const layout = layoutGraph(DMA_SNAPSHOT);
    for (const e of layout.edges) {
      if (e.kind === "element" || e.kind === "subclass") {
        expect(e.y1, `${e.source} -> ${e.target}`).toBeGreaterThan(e.y2);
      }
    }
  });

  it("keeps the root above everything and documents below everything", () => {
    const layout = layoutGraph(DMA_SNAPSHOT);
    const top = placed(layout, "TopLevel");
    const doc = placed(layout, "Doc2");
    for (const n of layout.nodes) {
      expect(top.y).toBeLessThanOrEqual(n.y);
      if (n.kind === "category") expect(doc.y).toBeGreaterThan(n.y);
    }
  });

  it("lays property nodes out laterally at their kind's height", () => {
    const layout = layoutGraph(MIS_SNAPSHOT);
    const b = placed(layout, "B");
    const cf = placed(layout, "CF#1");
    const p = placed(layout, "P");
    const notCf = placed(layout, "~CF#2");
    expect(cf.y).toBe(b.y);
    expect(notCf.y).toBe(p.y);
    // to the side of the hierarchy block, so the link runs horizontally
    const mainXs = layout.nodes.filter((n) => n.kind !== "property").map((n) => n.x);
    expect(cf.x).toBeGreaterThan(Math.max(...mainXs));
    expect(notCf.x).toBeGreaterThan(Math.max(...mainXs));
  });

  it("renders has-property edges flat", () => {
    const layout = layoutGraph(MIS_SNAPSHOT);
    for (const e of layout.edges.filter((e) => e.kind === "hasProperty")) {
      expect(e.y1).toBe(e.y2);
    }
  });

  it("keeps all nodes inside the reported canvas", () => {
    for (const snap of [DMA_SNAPSHOT, MIS_SNAPSHOT]) {
      const layout = layoutGraph(snap);
      for (const n of layout.nodes) {
        expect(n.x).toBeGreaterThanOrEqual(0);
        expect(n.y).toBeGreaterThanOrEqual(0);
        expect(n.x).toBeLessThanOrEqual(layout.width);
        expect(n.y).toBeLessThanOrEqual(layout.height);
      }
    }
  });

  it("produces an empty canvas for an empty session", () => {
    const layout = layoutGraph({ mode: "DMA", nodes: [], links: [] });
    expect(layout.nodes).toEqual([]);
    expect(layout.edges).toEqual([]);
    expect(layout.width).toBe(2 * MARGIN);
  });

  it("skips links whose endpoints are missing instead of throwing", () => {
    const layout = layoutGraph({
      mode: "DMA",
      nodes: [{ id: "A", kind: "category" }],
      links: [{ source: "A", target: "Ghost", kind: "subclass" }],
    });
    expect(layout.edges).toEqual([]);
  });
});
