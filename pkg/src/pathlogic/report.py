"""Session reports: a delimited belief table, human-readable step traces, and
figure rendering (graph layout and belief timeline) to image files.
"""
from __future__ import annotations

import csv
import io
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .events import EventReport  # noqa: E402
from .session import Session  # noqa: E402

TABLE_COLUMNS = ("index", "status", "formula", "from", "to",
                 "entrenchment", "category")


def _from_text(from_: dict) -> str:
    if from_["kind"] == "derived":
        return "{%s, %s}" % (from_["rule"],
                             ", ".join(str(p) for p in from_["premises"]))
    return from_["kind"]


def belief_table(session: Session, active_only: bool = False,
                 delimiter: str = "\t") -> str:
    """The belief set as delimited text, one row per entry."""
    out = io.StringIO()
    w = csv.writer(out, delimiter=delimiter, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for e in session.beliefs_wire(active_only=active_only):
        w.writerow([e["index"], e["status"], e["formula"], _from_text(e["from"]),
                    ",".join(str(i) for i in e["to"]),
                    e["entrenchment"], e["category"]])
    return out.getvalue()


def format_steps(report: EventReport) -> list[str]:
    """One line per step, for the REPL and report files."""
    lines = []
    for s in report.steps:
        kind = s["kind"]
        if kind == "entered":
            lines.append(f"{s['index']} entered  {s['formula']}  "
                         f"from {_from_text(s['from'])}  [{s['category']}]")
        elif kind == "duplicate":
            lines.append(f"duplicate of {s['existing']}: {s['formula']}")
        elif kind == "step-consumed":
            tail = f" (already {s['existing']})" if "existing" in s else ""
            lines.append(f"{s['index']} consumed  {s['reason']}: "
                         f"{s['formula']}{tail}")
        elif kind == "link":
            reason = f"  ({s['reason']})" if "reason" in s else ""
            lines.append(f"link {s['op']}  {s['link']}: "
                         f"{s['source']} -> {s['target']}{reason}")
        elif kind == "node":
            lines.append(f"node {s['op']}  {s['node']}: {s['name']}")
        elif kind == "revision":
            lines.append(f"revision  contradiction {s['contradiction']}; "
                         f"culprits {s['culprits']}; chose {s['chosen']}; "
                         f"retracted {s['retracted']}")
        elif kind == "removed":
            lines.append(f"removed  {s['indexes']}")
        elif kind == "choice-required":
            lines.append(f"choice required  contradiction {s['contradiction']}:")
            for c in s["culprits"]:
                lines.append(f"    {c['index']}  {c['formula']}  "
                             f"(entrenchment {c['entrenchment']})")
        elif kind == "choice":
            lines.append(f"choice  {s['chosen']}")
        else:
            lines.append(str(s))
    return lines


# -- figures ------------------------------------------------------------------

EDGE_STYLE = {
    "element": dict(color="#1f77b4", linestyle="-"),
    "subclass": dict(color="#2ca02c", linestyle="-"),
    "disjoint": dict(color="#d62728", linestyle="--"),
    "objectKind": dict(color="#1f77b4", linestyle="-"),
    "subkind": dict(color="#2ca02c", linestyle="-"),
    "hasProperty": dict(color="#9467bd", linestyle="-"),
}

NODE_STYLE = {
    "category": dict(boxstyle="round,pad=0.35", fc="#dbe9f6", ec="#1f77b4"),
    "kind": dict(boxstyle="round,pad=0.35", fc="#dbe9f6", ec="#1f77b4"),
    "document": dict(boxstyle="square,pad=0.3", fc="#e8f5e9", ec="#2ca02c"),
    "object": dict(boxstyle="square,pad=0.3", fc="#e8f5e9", ec="#2ca02c"),
    "property": dict(boxstyle="round,pad=0.3", fc="#f3e5f5", ec="#9467bd"),
}

CLASS_KINDS = ("category", "kind")
LEAF_KINDS = ("document", "object")
UPWARD_KINDS = ("subclass", "subkind")


def _layout(snapshot: dict) -> dict[str, tuple[float, float]]:
    """Layered positions: roots on top, documents/objects at the bottom,
    property nodes beside their kind."""
    up = {}
    for l in snapshot["links"]:
        if l["kind"] in UPWARD_KINDS:
            up.setdefault(l["source"], set()).add(l["target"])
    classes = [n["id"] for n in snapshot["nodes"] if n["kind"] in CLASS_KINDS]

    depth: dict[str, int] = {}

    def class_depth(c: str) -> int:
        if c not in depth:
            depth[c] = 0  # cycle-safe default; graphs here are acyclic
            parents = up.get(c, set())
            depth[c] = 1 + max((class_depth(p) for p in parents), default=-1)
        return depth[c]

    for c in classes:
        class_depth(c)
    bottom = max(depth.values(), default=-1) + 1

    rows: dict[int, list[str]] = {}
    for n in snapshot["nodes"]:
        if n["kind"] in CLASS_KINDS:
            rows.setdefault(depth[n["id"]], []).append(n["id"])
        elif n["kind"] in LEAF_KINDS:
            rows.setdefault(bottom, []).append(n["id"])
    pos: dict[str, tuple[float, float]] = {}
    for level, names in rows.items():
        for i, name in enumerate(sorted(names)):
            pos[name] = (i - (len(names) - 1) / 2.0, -float(level))
    # property nodes fan out to the right of their kind
    attached: dict[str, list[str]] = {}
    for l in snapshot["links"]:
        if l["kind"] == "hasProperty":
            attached.setdefault(l["source"], []).append(l["target"])
    for kind_name, props in attached.items():
        kx, ky = pos.get(kind_name, (0.0, 0.0))
        for j, p in enumerate(sorted(props)):
            pos[p] = (kx + 0.9 + 0.9 * j, ky + 0.45)
    # anything untouched (isolated property nodes) parks at the origin row
    for n in snapshot["nodes"]:
        pos.setdefault(n["id"], (0.0, 0.5))
    return pos


def render_graph_figure(session: Session, path: Path) -> None:
    snapshot = session.graph_snapshot()
    pos = _layout(snapshot)
    fig, ax = plt.subplots(figsize=(9, 6), layout="constrained")
    for l in snapshot["links"]:
        x1, y1 = pos[l["source"]]
        x2, y2 = pos[l["target"]]
        style = EDGE_STYLE[l["kind"]]
        if l["kind"] == "disjoint":
            ax.plot([x1, x2], [y1, y2], zorder=1, **style)
        else:
            ax.annotate("", xy=(x2, y2), xytext=(x1, y1), zorder=1,
                        arrowprops=dict(arrowstyle="-|>", **style))
    kinds = {n["id"]: n["kind"] for n in snapshot["nodes"]}
    for name, (x, y) in pos.items():
        if name not in kinds:
            continue
        ax.text(x, y, name, ha="center", va="center", fontsize=9, zorder=2,
                bbox=NODE_STYLE[kinds[name]])
    handles = [plt.Line2D([], [], label=k, **EDGE_STYLE[k])
               for k in sorted({l["kind"] for l in snapshot["links"]})]
    if handles:
        ax.legend(handles=handles, loc="upper left", fontsize=8)
    ax.set_title(f"{snapshot['mode']} graph")
    ax.set_axis_off()
    # keep a sane canvas even for one-node graphs
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    pad_x = max(1.0, 0.15 * (max(xs) - min(xs)))
    pad_y = max(1.0, 0.15 * (max(ys) - min(ys)))
    ax.set_xlim(min(xs) - pad_x, max(xs) + pad_x)
    ax.set_ylim(min(ys) - pad_y, max(ys) + pad_y)
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_timeline_figure(session: Session, path: Path) -> None:
    entries = session.beliefs_wire(active_only=False)
    fig, ax = plt.subplots(figsize=(9, 3.5), layout="constrained")
    if entries:
        xs = [e["index"] for e in entries]
        colors = ["#2ca02c" if e["status"] == "bel" else "#bbbbbb"
                  for e in entries]
        heights = [e["entrenchment"] for e in entries]
        ax.bar(xs, heights, color=colors, width=0.8)
        ax.set_xticks(xs)
    ax.set_xlabel("time stamp")
    ax.set_ylabel("entrenchment")
    ax.set_ylim(0, 1.05)
    ax.set_title("belief timeline (grey = disbelieved)")
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(session: Session, out_dir, stem: str = "session") -> list[Path]:
    """Delimited table plus rendered figures; returns the files written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = out / f"{stem}.tsv"
    table.write_text(belief_table(session), encoding="utf-8")
    graph = out / f"{stem}_graph.png"
    render_graph_figure(session, graph)
    timeline = out / f"{stem}_timeline.png"
    render_timeline_figure(session, timeline)
    return [table, graph, timeline]
