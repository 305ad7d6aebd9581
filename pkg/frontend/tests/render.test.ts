// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";

import { layoutGraph } from "../src/layout.js";
import {
  describeStep,
  renderBeliefTable,
  renderGraph,
  renderPendingDialog,
  renderSyntaxError,
} from "../src/render.js";
import type { BeliefEntry, GraphSnapshot, PendingChoice } from "../src/types.js";

const SNAPSHOT: GraphSnapshot = {
  mode: "MIS",
  nodes: [
    { id: "Q", kind: "kind" },
    { id: "R", kind: "kind" },
    { id: "P#1", kind: "property", property: "P", negated: false, occurrence: 1 },
    { id: "Nixon", kind: "object" },
  ],
  links: [
    { source: "Nixon", target: "Q", kind: "objectKind" },
    { source: "Nixon", target: "R", kind: "objectKind" },
    { source: "Q", target: "P#1", kind: "hasProperty" },
  ],
};

const BELIEFS: BeliefEntry[] = [
  { index: 1, formula: "forall x.(Q^k(x) -> P^p#1(x))", status: "bel",
    from: { kind: "hu" }, to: [4], entrenchment: 0.5, category: "aPosteriori" },
  { index: 2, formula: "forall x.(R^k(x) -> ~P^p#2(x))", status: "disbel",
    from: { kind: "hu" }, to: [6], entrenchment: 0.5, category: "aPosteriori" },
  { index: 4, formula: "P^p#1(Nixon)", status: "bel",
    from: { kind: "derived", rule: "AristotelianSyllogism", premises: [3, 1] },
    to: [7], entrenchment: 0.5, category: "synthetic" },
];

function svgRoot(): SVGElement {
  const el = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  document.body.appendChild(el);
  return el as SVGElement;
}

describe("renderGraph", () => {
  it("draws one group per node and one line per link, tagged by kind", () => {
    const svg = svgRoot();
    renderGraph(svg, layoutGraph(SNAPSHOT));
    const nodeIds = [...svg.querySelectorAll("g.node")]
      .map((g) => g.getAttribute("data-node-id")).sort();
    expect(nodeIds).toEqual(["Nixon", "P#1", "Q", "R"]);
    const kinds = [...svg.querySelectorAll("line.link")]
      .map((l) => l.getAttribute("data-kind")).sort();
    expect(kinds).toEqual(["hasProperty", "objectKind", "objectKind"]);
    // link kinds must be visually distinguishable: distinct classes
    expect(svg.querySelector("line.link-hasProperty")).not.toBeNull();
    expect(svg.querySelector("line.link-objectKind")).not.toBeNull();
  });

  it("rebuilds from scratch on every call", () => {
    const svg = svgRoot();
    renderGraph(svg, layoutGraph(SNAPSHOT));
    renderGraph(svg, layoutGraph({ mode: "MIS", nodes: [], links: [] }));
    expect(svg.querySelectorAll("g.node").length).toBe(0);
  });
});

describe("renderBeliefTable", () => {
  it("hides retracted rows until ghosting is on", () => {
    const div = document.createElement("div");
    renderBeliefTable(div, BELIEFS, false);
    expect(div.querySelectorAll("tr[data-index]").length).toBe(2);
    expect(div.querySelector('tr[data-index="2"]')).toBeNull();

    renderBeliefTable(div, BELIEFS, true);
    const ghost = div.querySelector('tr[data-index="2"]');
    expect(ghost).not.toBeNull();
    expect(ghost!.className).toBe("ghost");
  });

  it("prints derivations in support-list form", () => {
    const div = document.createElement("div");
    renderBeliefTable(div, BELIEFS, false);
    const row = div.querySelector('tr[data-index="4"]')!;
    expect(row.textContent).toContain("{AristotelianSyllogism, 3, 1}");
  });
});

describe("renderPendingDialog", () => {
  const PENDING: PendingChoice = {
    contradiction: 7,
    culprits: [
      { index: 1, formula: "forall x.(Q^k(x) -> P^p#1(x))", entrenchment: 0.5 },
      { index: 2, formula: "forall x.(R^k(x) -> ~P^p#2(x))", entrenchment: 0.5 },
      { index: 3, formula: "Q^k(Nixon)", entrenchment: 0.5 },
      { index: 5, formula: "R^k(Nixon)", entrenchment: 0.5 },
    ],
  };

  it("offers one option per culprit with entrenchment shown", () => {
    const div = document.createElement("div");
    document.body.appendChild(div);
    renderPendingDialog(div, PENDING, () => {});
    expect(div.hidden).toBe(false);
    const options = div.querySelectorAll('input[type="radio"]');
    expect(options.length).toBe(4);
    expect(div.textContent).toContain("entrenchment 0.5");
    expect(div.textContent).toContain("R^k(Nixon)");
  });

  it("keeps submit disabled until a culprit is picked, then posts it", () => {
    const div = document.createElement("div");
    document.body.appendChild(div);
    let chosen: number[] | null = null;
    renderPendingDialog(div, PENDING, (indexes) => { chosen = indexes; });

    const submit = div.querySelector("button")!;
    expect(submit.disabled).toBe(true);

    const radio = div.querySelector<HTMLInputElement>('input[value="2"]')!;
    radio.checked = true;
    radio.dispatchEvent(new Event("change", { bubbles: true }));
    expect(submit.disabled).toBe(false);

    div.querySelector("form")!.dispatchEvent(
      new Event("submit", { bubbles: true, cancelable: true }));
    expect(chosen).toEqual([2]);
  });

  it("collapses when nothing is pending", () => {
    const div = document.createElement("div");
    renderPendingDialog(div, null, () => {});
    expect(div.hidden).toBe(true);
    expect(div.querySelector("form")).toBeNull();
  });
});

describe("renderSyntaxError", () => {
  it("underlines exactly the span the service reported", () => {
    const div = document.createElement("div");
    renderSyntaxError(div, "Q^k(", [4, 5], "expected a formula, found end of input");
    const bad = div.querySelector(".syntax-bad")!;
    expect(bad.textContent).toBe(" "); // span points past the text's end
    expect(div.querySelector(".syntax-line")!.textContent).toContain("Q^k(");
    expect(div.textContent).toContain("expected a formula");

    renderSyntaxError(div, "CF^p#1(a)", [4, 5], "occurrence indexes are assigned, not written");
    expect(div.querySelector(".syntax-bad")!.textContent).toBe("#");
  });
});

describe("describeStep", () => {
  it("formats the common step kinds", () => {
    expect(describeStep({ kind: "entered", index: 6, formula: "~P^p#2(Nixon)",
                          category: "synthetic" }))
      .toBe("#6 entered: ~P^p#2(Nixon)  [synthetic]");
    expect(describeStep({ kind: "link", op: "remove", link: "hasProperty",
                          source: "R", target: "~P#2" }))
      .toBe("link remove hasProperty: R -> ~P#2");
    expect(describeStep({ kind: "revision", contradiction: 7, culprits: [1, 2, 3, 5],
                          chosen: [2], retracted: [2, 6, 7] }))
      .toBe("revision at #7: chose [2], retracted [2, 6, 7]");
    expect(describeStep({ kind: "choice", chosen: [2] })).toBe("choice: [2]");
  });
});
