/**
 * DOM builders.  Every function here rebuilds its container from a payload
 * or a layout; no incremental patching, no retained state.  Link kinds are
 * distinguished with data-kind attributes plus CSS classes so the styling
 * stays in one stylesheet.
 */

import type { Layout } from "./layout.js";
import type { BeliefEntry, Culprit, PendingChoice, Step } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl(doc: Document, tag: string, attrs: Record<string, string>): SVGElement {
  const el = doc.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

function clear(el: Element): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

// -- graph -------------------------------------------------------------------

export function renderGraph(svg: SVGElement, layout: Layout): void {
  clear(svg);
  const doc = svg.ownerDocument;
  svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
  svg.setAttribute("width", String(layout.width));
  svg.setAttribute("height", String(layout.height));

  for (const e of layout.edges) {
    const line = svgEl(doc, "line", {
      x1: String(e.x1), y1: String(e.y1), x2: String(e.x2), y2: String(e.y2),
      class: `link link-${e.kind}`,
      "data-kind": e.kind,
      "data-source": e.source,
      "data-target": e.target,
    });
    svg.appendChild(line);
  }

  for (const n of layout.nodes) {
    const g = svgEl(doc, "g", {
      class: `node node-${n.kind}`,
      "data-node-id": n.id,
      "data-kind": n.kind,
      transform: `translate(${n.x},${n.y})`,
    });
    if (n.kind === "category" || n.kind === "kind") {
      g.appendChild(svgEl(doc, "rect",
        { x: "-55", y: "-16", width: "110", height: "32", rx: "4" }));
    } else {
      g.appendChild(svgEl(doc, "ellipse", { cx: "0", cy: "0", rx: "52", ry: "17" }));
    }
    const text = svgEl(doc, "text", { "text-anchor": "middle", dy: "4" });
    text.textContent = n.id;
    g.appendChild(text);
    svg.appendChild(g);
  }
}

// -- belief table ------------------------------------------------------------

function fromText(entry: BeliefEntry): string {
  if (entry.from.kind === "derived") {
    return `{${entry.from.rule}, ${(entry.from.premises ?? []).join(", ")}}`;
  }
  return entry.from.kind;
}

export function renderBeliefTable(container: HTMLElement, beliefs: BeliefEntry[],
                                  showDisbelieved: boolean): void {
  clear(container);
  const doc = container.ownerDocument;
  const table = doc.createElement("table");
  table.className = "beliefs";
  const head = doc.createElement("tr");
  for (const col of ["#", "status", "formula", "from", "to", "entrenchment", "category"]) {
    const th = doc.createElement("th");
    th.textContent = col;
    head.appendChild(th);
  }
  table.appendChild(head);

  for (const b of beliefs) {
    if (b.status === "disbel" && !showDisbelieved) continue;
    const tr = doc.createElement("tr");
    tr.dataset.index = String(b.index);
    if (b.status === "disbel") tr.className = "ghost";
    const cells = [String(b.index), b.status, b.formula, fromText(b),
                   `[${b.to.join(", ")}]`, String(b.entrenchment), b.category];
    for (const c of cells) {
      const td = doc.createElement("td");
      td.textContent = c;
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  container.appendChild(table);
}

// -- timeline ----------------------------------------------------------------

export function describeStep(s: Step): string {
  switch (s.kind) {
    case "entered":
      return `#${s.index} entered: ${s.formula}  [${s.category}]`;
    case "duplicate":
      return `duplicate of #${s.existing}: ${s.formula}`;
    case "step-consumed":
      return `step #${s.index} consumed (${s.reason}): ${s.formula}`;
    case "link":
      return `link ${s.op} ${s.link}: ${s.source} -> ${s.target}`;
    case "node":
      return `node ${s.op} ${s.node}: ${s.name}`;
    case "revision":
      return `revision at #${s.contradiction}: chose [${(s.chosen as number[]).join(", ")}], ` +
             `retracted [${(s.retracted as number[]).join(", ")}]`;
    case "removed":
      return `removed [${(s.indexes as number[]).join(", ")}]`;
    case "choice-required":
      return `choice required at #${s.contradiction}`;
    case "choice":
      return `choice: [${(s.chosen as number[]).join(", ")}]`;
    default:
      return JSON.stringify(s);
  }
}

export function renderTimeline(container: HTMLElement, steps: Step[]): void {
  clear(container);
  const doc = container.ownerDocument;
  const list = doc.createElement("ol");
  list.className = "timeline";
  for (const s of steps) {
    const li = doc.createElement("li");
    li.dataset.kind = s.kind;
    li.textContent = describeStep(s);
    list.appendChild(li);
  }
  container.appendChild(list);
}

// -- pending-choice dialog ---------------------------------------------------

export function renderPendingDialog(container: HTMLElement,
                                    pending: PendingChoice | null,
                                    onSubmit: (indexes: number[]) => void): void {
  clear(container);
  if (!pending) {
    container.hidden = true;
    return;
  }
  container.hidden = false;
  const doc = container.ownerDocument;

  const title = doc.createElement("p");
  title.className = "conflict-title";
  title.textContent =
    `Contradiction at #${pending.contradiction}. Pick the axiom to retract:`;
  container.appendChild(title);

  const form = doc.createElement("form");
  for (const c of pending.culprits as Culprit[]) {
    const label = doc.createElement("label");
    label.className = "culprit";
    const radio = doc.createElement("input");
    radio.type = "radio";
    radio.name = "culprit";
    radio.value = String(c.index);
    label.appendChild(radio);
    const text = doc.createElement("span");
    text.textContent = `#${c.index}  ${c.formula}  (entrenchment ${c.entrenchment})`;
    label.appendChild(text);
    form.appendChild(label);
  }

  const submit = doc.createElement("button");
  submit.type = "submit";
  submit.textContent = "Retract";
  submit.disabled = true;
  form.appendChild(submit);

  form.addEventListener("change", () => {
    submit.disabled = !form.querySelector("input:checked");
  });
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const checked = form.querySelector<HTMLInputElement>("input:checked");
    if (checked) onSubmit([Number(checked.value)]);
  });
  container.appendChild(form);
}

// -- errors ------------------------------------------------------------------

/** Inline syntax marker: the offending span of the input, underlined. */
export function renderSyntaxError(container: HTMLElement, text: string,
                                  span: [number, number], message: string): void {
  clear(container);
  const doc = container.ownerDocument;
  const line = doc.createElement("pre");
  line.className = "syntax-line";
  const before = doc.createElement("span");
  before.textContent = text.slice(0, span[0]);
  const bad = doc.createElement("span");
  bad.className = "syntax-bad";
  bad.textContent = text.slice(span[0], span[1]) || " ";
  const after = doc.createElement("span");
  after.textContent = text.slice(span[1]);
  line.append(before, bad, after);
  container.appendChild(line);
  const msg = doc.createElement("p");
  msg.className = "error-message";
  msg.textContent = message;
  container.appendChild(msg);
}

export function renderError(container: HTMLElement, code: string, message: string): void {
  clear(container);
  const doc = container.ownerDocument;
  const p = doc.createElement("p");
  p.className = "error-message";
  p.textContent = `${code}: ${message}`;
  container.appendChild(p);
}
