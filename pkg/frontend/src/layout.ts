/**
 * Layered placement for a session graph snapshot.
 *
 * Hierarchy links in the snapshot always point upward (element, subclass,
 * objectKind, subkind: source sits below target), so ranking is a longest
 * path walk toward the roots.  Roots land on the top row; documents and
 * objects are pinned to a shared bottom row regardless of how high their
 * categories sit.  Property nodes do not take part in ranking at all: each
 * one sits on the same row as its owning kind, shifted to the right of the
 * main block, so has-property links run horizontally.  Disjoint links are
 * drawn but never rank anything.
 *
 * Pure data in, pure data out; no DOM anywhere in this module.
 */

import type { GraphLink, GraphNode, GraphSnapshot, LinkKind, NodeKind } from "./types.js";

export interface PlacedNode {
  id: string;
  kind: NodeKind;
  row: number;
  x: number;
  y: number;
}

export interface PlacedEdge {
  source: string;
  target: string;
  kind: LinkKind;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface Layout {
  nodes: PlacedNode[];
  edges: PlacedEdge[];
  width: number;
  height: number;
}

export const H_GAP = 140;
export const V_GAP = 95;
export const MARGIN = 50;
export const PROP_GAP = 120;

const UPWARD: LinkKind[] = ["element", "subclass", "objectKind", "subkind"];
const LEAF_KINDS: NodeKind[] = ["document", "object"];

/** Longest upward distance from each hierarchy node to a root. */
export function rankNodes(nodes: GraphNode[], links: GraphLink[]): Map<string, number> {
  const up = new Map<string, string[]>();
  const hierarchy = nodes.filter((n) => n.kind !== "property");
  for (const n of hierarchy) {
    up.set(n.id, []);
  }
  for (const l of links) {
    if (UPWARD.includes(l.kind) && up.has(l.source) && up.has(l.target)) {
      up.get(l.source)!.push(l.target);
    }
  }

  const rows = new Map<string, number>();
  const visiting = new Set<string>();
  const walk = (id: string): number => {
    const done = rows.get(id);
    if (done !== undefined) return done;
    if (visiting.has(id)) return 0; // cycle in a malformed payload; don't hang
    visiting.add(id);
    const parents = up.get(id) ?? [];
    const row = parents.length === 0 ? 0 : 1 + Math.max(...parents.map(walk));
    visiting.delete(id);
    rows.set(id, row);
    return row;
  };
  for (const n of hierarchy) walk(n.id);

  // leaves share one bottom row below every category/kind
  let catMax = 0;
  for (const n of hierarchy) {
    if (!LEAF_KINDS.includes(n.kind)) catMax = Math.max(catMax, rows.get(n.id)!);
  }
  const bottom = catMax + 1;
  for (const n of hierarchy) {
    if (LEAF_KINDS.includes(n.kind)) rows.set(n.id, bottom);
  }
  return rows;
}

/** Order each row by the mean position of already-placed link targets. */
function orderRows(rowsOf: Map<string, number>, links: GraphLink[]): Map<number, string[]> {
  const byRow = new Map<number, string[]>();
  for (const [id, row] of rowsOf) {
    if (!byRow.has(row)) byRow.set(row, []);
    byRow.get(row)!.push(id);
  }
  const rowNumbers = [...byRow.keys()].sort((a, b) => a - b);
  const pos = new Map<string, number>();
  for (const r of rowNumbers) {
    const ids = byRow.get(r)!;
    ids.sort();
    if (r > rowNumbers[0]) {
      const bary = (id: string): number => {
        const anchors = links
          .filter((l) => UPWARD.includes(l.kind) && l.source === id && pos.has(l.target))
          .map((l) => pos.get(l.target)!);
        if (anchors.length === 0) return Number.POSITIVE_INFINITY;
        return anchors.reduce((a, b) => a + b, 0) / anchors.length;
      };
      const keyed = ids.map((id) => ({ id, b: bary(id) }));
      keyed.sort((a, b) => (a.b === b.b ? a.id.localeCompare(b.id) : a.b - b.b));
      byRow.set(r, keyed.map((k) => k.id));
    }
    byRow.get(r)!.forEach((id, i) => pos.set(id, i));
  }
  return byRow;
}

export function layoutGraph(snapshot: GraphSnapshot): Layout {
  const { nodes, links } = snapshot;
  if (nodes.length === 0) {
    return { nodes: [], edges: [], width: 2 * MARGIN, height: 2 * MARGIN };
  }

  const rows = rankNodes(nodes, links);
  const byRow = orderRows(rows, links);

  const widest = Math.max(1, ...[...byRow.values()].map((ids) => ids.length));
  const mainWidth = 2 * MARGIN + (widest - 1) * H_GAP;

  const placed = new Map<string, PlacedNode>();
  for (const [row, ids] of byRow) {
    const rowWidth = (ids.length - 1) * H_GAP;
    const x0 = MARGIN + (mainWidth - 2 * MARGIN - rowWidth) / 2;
    ids.forEach((id, i) => {
      const node = nodes.find((n) => n.id === id)!;
      placed.set(id, {
        id,
        kind: node.kind,
        row,
        x: x0 + i * H_GAP,
        y: MARGIN + row * V_GAP,
      });
    });
  }

  // property nodes: same row as the owning kind, shifted right of the block
  const slotByRow = new Map<number, number>();
  for (const n of nodes.filter((n) => n.kind === "property").sort((a, b) => a.id.localeCompare(b.id))) {
    const owner = links.find((l) => l.kind === "hasProperty" && l.target === n.id);
    const anchor = owner ? placed.get(owner.source) : undefined;
    const row = anchor ? anchor.row : 0;
    const slot = slotByRow.get(row) ?? 0;
    slotByRow.set(row, slot + 1);
    placed.set(n.id, {
      id: n.id,
      kind: "property",
      row,
      x: mainWidth + slot * PROP_GAP,
      y: MARGIN + row * V_GAP,
    });
  }

  const edges: PlacedEdge[] = [];
  for (const l of links) {
    const s = placed.get(l.source);
    const t = placed.get(l.target);
    if (!s || !t) continue; // malformed payload; skip rather than throw
    edges.push({ source: l.source, target: l.target, kind: l.kind,
                 x1: s.x, y1: s.y, x2: t.x, y2: t.y });
  }

  const xs = [...placed.values()].map((p) => p.x);
  const ys = [...placed.values()].map((p) => p.y);
  return {
    nodes: [...placed.values()],
    edges,
    width: Math.max(...xs) + MARGIN,
    height: Math.max(...ys) + MARGIN,
  };
}
