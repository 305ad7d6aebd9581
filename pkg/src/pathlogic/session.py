"""One reasoning session: a controller plus the pending-choice workflow,
ground-atom queries, wire serialization, and event-sourced persistence.

A session accepts one mutation at a time.  When a revision needs a human
choice the controller generator suspends; the session parks it, reports the
culprits, and refuses further input until ``resolve_choice`` resumes it.
Persistence stores the raw input strings and choice resolutions, never state:
replaying them reproduces every label bit-for-bit, because all tie-breaks in
the engine are specified.
"""
from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from typing import Optional, Union

from .beliefs import Entry, ExternalSource, GroundAtom
from .dma import DmaController
from .errors import (
    InvalidChoice,
    MalformedInput,
    NotPending,
    ReplayDivergence,
    SessionBusy,
    UnknownCategory,
    VersionMismatch,
)
from .events import EventReport
from .mis import KIND, MisController, prop_node_label
from .revision import ChoiceRequest
from .text import parse, render

FILE_VERSION = 1

MODES = ("DMA", "MIS")

Controller = Union[DmaController, MisController]


def entry_wire(e: Entry) -> dict:
    fl = e.label.from_list
    if isinstance(fl, ExternalSource):
        from_ = {"kind": fl.tag}
    else:
        from_ = {"kind": "derived", "rule": fl.rule, "premises": list(fl.premises)}
    return {
        "index": e.index,
        "formula": render(e.formula),
        "status": e.label.status,
        "from": from_,
        "to": sorted(e.label.to_list),
        "entrenchment": e.label.entrenchment,
        "category": e.label.category,
    }


def _choice_wire(req: ChoiceRequest) -> dict:
    return {
        "contradiction": req.contradiction_index,
        "culprits": [{"index": c.index, "formula": render(c.formula),
                      "entrenchment": c.entrenchment} for c in req.culprits],
    }


@dataclass
class Session:
    id: str
    mode: str
    controller: Controller
    event_log: list[EventReport] = field(default_factory=list)
    inputs: list[str] = field(default_factory=list)
    choices: list[list[int]] = field(default_factory=list)
    _gen: object = None
    _pending: Optional[ChoiceRequest] = None
    _pending_report: Optional[EventReport] = None

    @classmethod
    def new(cls, mode: str, session_id: Optional[str] = None,
            auto: bool = False) -> "Session":
        mode = mode.upper()
        if mode not in MODES:
            raise MalformedInput(f"mode must be one of {'/'.join(MODES)}")
        controller = DmaController() if mode == "DMA" else MisController()
        controller.auto = auto
        return cls(session_id or uuid.uuid4().hex[:12], mode, controller)

    # -- state views ---------------------------------------------------------

    @property
    def beliefs(self):
        return self.controller.beliefs

    @property
    def auto(self) -> bool:
        return self.controller.auto

    def set_auto(self, flag: bool) -> None:
        self.controller.auto = bool(flag)

    @property
    def pending(self) -> Optional[ChoiceRequest]:
        return self._pending

    def pending_wire(self) -> Optional[dict]:
        return _choice_wire(self._pending) if self._pending else None

    def beliefs_wire(self, active_only: bool = True) -> list[dict]:
        return [entry_wire(e) for e in self.beliefs.in_order()
                if e.active or not active_only]

    # -- mutations -----------------------------------------------------------

    def submit_input(self, text: str) -> EventReport:
        """Parse and run one input.  The report ends with a choice-required
        step when the run suspended on a revision choice."""
        if self._pending is not None:
            raise SessionBusy("a revision choice is pending")
        f = parse(text, "mis" if self.mode == "MIS" else "plain")
        report = EventReport()
        gen = self.controller.input(f, report)
        self._advance(gen, report, None)
        self.inputs.append(text)
        self.event_log.append(report)
        return report

    def resolve_choice(self, indexes) -> EventReport:
        """Resume a suspended revision with the chosen culprits.  Returns the
        continuation steps (the full trace stays on the original report)."""
        if self._pending is None:
            raise NotPending("no revision choice is pending")
        chosen = sorted({int(i) for i in indexes})
        allowed = {c.index for c in self._pending.culprits}
        if not chosen or not set(chosen) <= allowed:
            raise InvalidChoice(
                f"choose a nonempty subset of {sorted(allowed)}")
        report = self._pending_report
        mark = len(report.steps)
        report.add("choice", chosen=chosen)
        gen = self._gen
        self._pending = None
        self._advance(gen, report, chosen)
        self.choices.append(chosen)
        return EventReport(report.steps[mark:])

    def _advance(self, gen, report: EventReport, send_value) -> None:
        try:
            if send_value is None:
                req = next(gen)
            else:
                req = gen.send(send_value)
        except StopIteration:
            self._gen = None
            self._pending = None
            self._pending_report = None
            return
        except BaseException:
            # a dead generator must not leave the session half-suspended
            self._gen = None
            self._pending = None
            self._pending_report = None
            raise
        self._gen = gen
        self._pending = req
        self._pending_report = report
        report.add("choice-required", **_choice_wire(req))

    # -- queries -------------------------------------------------------------

    def query_members(self, categories: list[str], op: str = "or") -> list[str]:
        """Constants classified under all (and) or any (or) of the names."""
        if op not in ("and", "or"):
            raise MalformedInput("connective must be 'and' or 'or'")
        if not categories:
            raise UnknownCategory("no category names given")
        if self.mode == "DMA":
            known = self.controller.graph.cat_nodes
            sort = None
        else:
            known = self.controller.hierarchy.kind_nodes
            sort = KIND
        member_sets = []
        for cat in categories:
            if cat not in known:
                raise UnknownCategory(f"unknown category {cat}")
            members = {f.args[0].name for _, f in self.beliefs.find_active(
                GroundAtom(pred=(cat, sort)))}
            member_sets.append(members)
        combine = set.intersection if op == "and" else set.union
        return sorted(combine(*member_sets))

    # -- graph serialization -------------------------------------------------

    def graph_snapshot(self) -> dict:
        if self.mode == "DMA":
            g = self.controller.graph
            nodes = [{"id": n, "kind": "category"} for n in sorted(g.cat_nodes)]
            nodes += [{"id": n, "kind": "document"} for n in sorted(g.doc_nodes)]
            links = [{"source": a, "target": b, "kind": "element"}
                     for a, b in sorted(g.element_links)]
            links += [{"source": a, "target": b, "kind": "subclass"}
                      for a, b in sorted(g.subclass_links)]
            links += [{"source": a, "target": b, "kind": "disjoint"}
                      for a, b in sorted(tuple(sorted(p)) for p in g.disjoint_links)]
            return {"mode": "DMA", "nodes": nodes, "links": links}
        h = self.controller.hierarchy
        addresses = h.compute_addresses()

        def addr(key) -> list[list[int]]:
            return sorted(list(a) for a in addresses.get(key, set()))

        nodes = [{"id": k, "kind": "kind", "addresses": addr(("kind", k))}
                 for k in h.kind_nodes]
        nodes += [{"id": o, "kind": "object", "addresses": addr(("obj", o))}
                  for o in sorted(h.object_nodes)]
        nodes += [{"id": prop_node_label(pn), "kind": "property",
                   "property": pn[0], "negated": pn[1], "occurrence": pn[2]}
                  for pn in sorted(h.property_nodes)]
        links = [{"source": o, "target": k, "kind": "objectKind"}
                 for o, k in sorted(h.object_kind_links)]
        links += [{"source": a, "target": b, "kind": "subkind"}
                  for a, b in sorted(h.subkind_links)]
        links += [{"source": k, "target": prop_node_label(pn), "kind": "hasProperty"}
                  for k, pn in sorted(h.has_property_links)]
        return {"mode": "MIS", "nodes": nodes, "links": links}

    def graph_dot(self) -> str:
        """DOT text; edges carry a kind attribute, property labels their
        occurrence index."""
        snap = self.graph_snapshot()
        out = ["digraph session {", "  rankdir=BT;"]
        for n in snap["nodes"]:
            attrs = [f'kind={n["kind"]}']
            if n["kind"] == "category" or n["kind"] == "kind":
                attrs.append("shape=box")
            elif n["kind"] == "property":
                attrs.append("shape=ellipse")
                attrs.append(f'label="{n["id"]}"')
            out.append(f'  "{n["id"]}" [{", ".join(attrs)}];')
        for l in snap["links"]:
            attrs = [f'kind={l["kind"]}']
            if l["kind"] == "disjoint":
                attrs.append("dir=none")
                attrs.append("style=dashed")
            out.append(f'  "{l["source"]}" -> "{l["target"]}" [{", ".join(attrs)}];')
        out.append("}")
        return "\n".join(out) + "\n"

    # -- persistence ---------------------------------------------------------

    def export_file(self) -> dict:
        return {
            "version": FILE_VERSION,
            "mode": self.mode,
            "auto": self.auto,
            "inputs": list(self.inputs),
            "choices": [list(c) for c in self.choices],
        }


def import_file(doc: dict, session_id: Optional[str] = None) -> Session:
    """Rebuild a session by replaying its file through a fresh engine."""
    if not isinstance(doc, dict):
        raise ReplayDivergence("session file must be an object")
    if doc.get("version") != FILE_VERSION:
        raise VersionMismatch(
            f"unsupported session file version {doc.get('version')!r}")
    mode = doc.get("mode", "")
    if not isinstance(mode, str) or mode.upper() not in MODES:
        raise ReplayDivergence(f"unknown mode {mode!r}")
    s = Session.new(mode, session_id=session_id, auto=bool(doc.get("auto", False)))
    remaining = [list(c) for c in doc.get("choices", [])]
    inputs = list(doc.get("inputs", []))
    for pos, text in enumerate(inputs):
        s.submit_input(text)
        while s.pending is not None and remaining:
            s.resolve_choice(remaining.pop(0))
        if s.pending is not None and pos < len(inputs) - 1:
            raise ReplayDivergence(
                "file shows an unresolved choice before later inputs")
    if remaining:
        raise ReplayDivergence("file lists more choices than conflicts arose")
    return s
