"""Document taxonomy assistant: maintains a DAG of documents and categories in
lock-step with the belief set, deriving every document-category membership and
policing consistency against declared disjointness.

User inputs take three shapes: a membership atom alpha(a), a subsumption axiom
forall x.(alpha(x) -> beta(x)), and a disjointness axiom
forall x.~(alpha(x) & beta(x)).  Each maps to a link kind.  Element and
subclass links are displayed as the transitive reduction of the active axioms'
edges: an edge whose endpoints are already connected through a longer path is
suppressed (its formula stays believed) and reappears if a retraction removes
the bypass.  Disjoint links sit outside the path structure and are shown
one-to-one with their axioms.

Event types: 1 = membership input, 2 = conflict handling (falsum entry plus
dialectical belief revision plus graph cleanup), 3 = derived membership entry,
4 = subsumption input, 5 = disjointness input.  Events run as generators so a
revision needing an interactive choice can suspend the whole cascade; the
driver sends the chosen culprit indexes back in.

Cascades rescan the belief set dynamically in ascending time-stamp order and
re-check that every premise is still active before each rule application, so
a mid-cascade retraction silently ends the affected branches.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .beliefs import (
    A_POSTERIORI,
    SYNTHETIC,
    BeliefSet,
    Derived,
    DisjointnessOver,
    ExternalSource,
    GroundAtom,
    UniversalImplication,
)
from .errors import (
    DuplicateActive,
    InputContradictsBeliefs,
    MalformedInput,
    NotAnAxiom,
    WouldCreateLoop,
    WouldCreateRedundantPath,
)
from .events import EventReport
from .kernel import aristotelian_syllogism, conflict_detection
from .revision import forward_retract, run_dbr
from .syntax import And, Atom, Bottom, Const, Forall, Formula, Imp, Not, Var
from .text import render

DOC = "doc"
CAT = "cat"

Node = tuple[str, str]  # (namespace, name)


@dataclass
class TaxonomyGraph:
    doc_nodes: set[str] = field(default_factory=set)
    cat_nodes: set[str] = field(default_factory=set)
    element_links: set[tuple[str, str]] = field(default_factory=set)  # (doc, cat)
    subclass_links: set[tuple[str, str]] = field(default_factory=set)  # (sub, super)
    disjoint_links: set[frozenset[str]] = field(default_factory=set)

    def successors(self, node: Node) -> list[Node]:
        ns, name = node
        if ns == DOC:
            return [(CAT, c) for d, c in sorted(self.element_links) if d == name]
        return [(CAT, s) for c, s in sorted(self.subclass_links) if c == name]

    def closure(self, node: Node) -> set[Node]:
        """node plus everything reachable from it."""
        seen = {node}
        stack = [node]
        while stack:
            for nxt in self.successors(stack.pop()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    def would_create_redundant_path(self, source: Node, target: Node) -> bool:
        """True iff the link exists already or target is reachable in >= 2 hops."""
        link = (source[1], target[1])
        if source[0] == DOC:
            if link in self.element_links:
                return True
        elif link in self.subclass_links:
            return True
        return any(target in self.closure(w)
                   for w in self.successors(source) if w != target)

    def would_create_loop(self, sub: str, super_: str) -> bool:
        return sub == super_ or (CAT, sub) in self.closure((CAT, super_))

    def neighbors(self, node: Node) -> set[Node]:
        ns, name = node
        out: set[Node] = set()
        for d, c in self.element_links:
            if ns == DOC and d == name:
                out.add((CAT, c))
            if ns == CAT and c == name:
                out.add((DOC, d))
        if ns == CAT:
            for a, b in self.subclass_links:
                if a == name:
                    out.add((CAT, b))
                if b == name:
                    out.add((CAT, a))
            for pair in self.disjoint_links:
                if name in pair:
                    out.update((CAT, o) for o in pair if o != name)
        return out


# input shape destructuring ---------------------------------------------------

def membership_parts(f: Formula) -> Optional[tuple[str, str]]:
    """alpha(a) -> (alpha, a)."""
    if (isinstance(f, Atom) and f.sort is None and len(f.args) == 1
            and isinstance(f.args[0], Const)):
        return f.pred, f.args[0].name
    return None


def subclass_parts(f: Formula) -> Optional[tuple[str, str]]:
    """forall x.(alpha(x) -> beta(x)) -> (alpha, beta)."""
    if isinstance(f, Forall) and isinstance(f.body, Imp):
        l, r = f.body.left, f.body.right
        if (isinstance(l, Atom) and isinstance(r, Atom)
                and l.sort is None and r.sort is None
                and l.args == (f.var,) and r.args == (f.var,)):
            return l.pred, r.pred
    return None


def disjoint_parts(f: Formula) -> Optional[tuple[str, str]]:
    """forall x.~(alpha(x) & beta(x)) -> (alpha, beta)."""
    if isinstance(f, Forall) and isinstance(f.body, Not) and isinstance(f.body.body, And):
        l, r = f.body.body.left, f.body.body.right
        if (isinstance(l, Atom) and isinstance(r, Atom)
                and l.sort is None and r.sort is None
                and l.args == (f.var,) and r.args == (f.var,)):
            return l.pred, r.pred
    return None


class DmaController:
    """Owns the belief set and taxonomy graph for one DMA session."""

    mode = "DMA"

    def __init__(self, beliefs: Optional[BeliefSet] = None):
        self.beliefs = beliefs or BeliefSet()
        self.graph = TaxonomyGraph()
        self.auto = False  # AutoChooser toggle; interactive suspends

    # -- public entry points -------------------------------------------------

    def input(self, f: Formula, report: EventReport):
        """Dispatch one user input.  Generator (may yield a ChoiceRequest)."""
        existing = self.beliefs.duplicate_of(f)
        if existing is not None:
            raise DuplicateActive(existing)
        if membership_parts(f) is not None:
            yield from self._event1(f, report)
        elif (parts := subclass_parts(f)) is not None:
            if parts[0] == parts[1]:
                raise MalformedInput("subsumption needs two distinct categories")
            yield from self._event4(f, report)
        elif (parts := disjoint_parts(f)) is not None:
            if parts[0] == parts[1]:
                raise MalformedInput("disjointness needs two distinct categories")
            yield from self._event5(f, report)
        else:
            raise MalformedInput(
                "DMA inputs are alpha(a), forall x.(alpha(x) -> beta(x)), "
                "or forall x.~(alpha(x) & beta(x))")

    def remove_link(self, axiom_index: int, report: EventReport):
        """Retract a link axiom and everything derived through it."""
        entry = self.beliefs.entry(axiom_index)
        if not entry.active or not isinstance(entry.label.from_list, ExternalSource):
            raise NotAnAxiom(f"entry {axiom_index} is not an active extralogical axiom")
        if (membership_parts(entry.formula) is None
                and subclass_parts(entry.formula) is None
                and disjoint_parts(entry.formula) is None):
            raise NotAnAxiom(f"entry {axiom_index} is not a link formula")
        flipped = forward_retract(self.beliefs, [axiom_index])
        report.add("removed", indexes=flipped)
        self._cleanup(flipped, report)
        yield from self._salvage(report)

    # -- events --------------------------------------------------------------

    def _enter(self, report: EventReport, f: Formula, origin, category) -> int:
        idx = self.beliefs.enter(f, origin, category=category)
        if isinstance(origin, ExternalSource):
            from_ = {"kind": origin.tag}
        else:
            from_ = {"kind": "derived", "rule": origin.rule,
                     "premises": list(origin.premises)}
        report.add("entered", index=idx, formula=render(f), **{"from": from_},
                   category=category)
        return idx

    def _ensure_cat(self, name: str, report: EventReport) -> None:
        if name not in self.graph.cat_nodes:
            self.graph.cat_nodes.add(name)
            report.add("node", op="add", node=CAT, name=name)

    def _ensure_doc(self, name: str, report: EventReport) -> None:
        if name not in self.graph.doc_nodes:
            self.graph.doc_nodes.add(name)
            report.add("node", op="add", node=DOC, name=name)

    def _link_axiom_edges(self) -> tuple[set[tuple[str, str]], set[tuple[str, str]]]:
        """Edges asserted by the active extralogical membership/subsumption axioms."""
        elements: set[tuple[str, str]] = set()
        subclasses: set[tuple[str, str]] = set()
        for e in self.beliefs.in_order():
            if not e.active or not isinstance(e.label.from_list, ExternalSource):
                continue
            if (m := membership_parts(e.formula)) is not None:
                elements.add((m[1], m[0]))
            elif (m := subclass_parts(e.formula)) is not None:
                subclasses.add(m)
        return elements, subclasses

    def _sync_links(self):
        """Reduce the displayed element/subclass links to the transitive
        reduction of the active axioms' edges.  Returns the applied delta
        (added elements, removed elements, added subclasses, removed
        subclasses); the caller narrates it."""
        elements, subclasses = self._link_axiom_edges()
        reach: dict[str, set[str]] = {}

        def closure(c: str) -> set[str]:
            if c not in reach:
                reach[c] = {c}
                for u, v in subclasses:
                    if u == c:
                        reach[c] |= closure(v)
            return reach[c]

        keep_sub = {(u, v) for u, v in subclasses
                    if not any(x == u and w != v and v in closure(w)
                               for x, w in subclasses)}
        keep_el = {(d, c) for d, c in elements
                   if not any(x == d and w != c and c in closure(w)
                              for x, w in elements)}
        delta = (keep_el - self.graph.element_links,
                 self.graph.element_links - keep_el,
                 keep_sub - self.graph.subclass_links,
                 self.graph.subclass_links - keep_sub)
        self.graph.element_links = keep_el
        self.graph.subclass_links = keep_sub
        return delta

    def _event1(self, f: Formula, report: EventReport):
        alpha, a = membership_parts(f)
        idx = self._enter(report, f, ExternalSource(), A_POSTERIORI)
        self._ensure_doc(a, report)
        self._ensure_cat(alpha, report)
        added_el, removed_el, _, _ = self._sync_links()
        if (a, alpha) in added_el:
            report.add("link", op="add", link="element", source=a, target=alpha)
        else:
            report.add("link", op="skip", link="element", source=a, target=alpha,
                       reason="redundant")
        for d, c in sorted(removed_el):
            report.add("link", op="remove", link="element", source=d, target=c,
                       reason="redundant")
        yield from self._disjoint_scan(idx, f, alpha, a, report)
        yield from self._ground_cascade(idx, f, alpha, a, report)

    def _event2(self, rule: str, premises: tuple[int, ...], report: EventReport):
        """Enter falsum, revise, clean the graph, re-derive survivors."""
        bot = self._enter(report, Bottom(), Derived(rule, premises), SYNTHETIC)
        case = yield from run_dbr(self.beliefs, bot, self.auto)
        report.add("revision", contradiction=bot, culprits=case.culprits,
                   chosen=case.chosen, retracted=case.retracted)
        self._cleanup(case.retracted, report)
        yield from self._salvage(report)

    def _salvage(self, report: EventReport):
        """Re-derive memberships whose earlier entries died with a retraction
        but which the surviving axioms still support."""
        while True:
            job = None
            for m_idx, m_f in self.beliefs.find_active(GroundAtom(pred=(None, None))):
                alpha = m_f.pred
                for ax_idx, ax_f in self.beliefs.find_active(
                        UniversalImplication(antecedent=(alpha, None),
                                             consequent_negated=False)):
                    conclusion = aristotelian_syllogism([ax_f, m_f])[0]
                    if self.beliefs.duplicate_of(conclusion) is None:
                        job = (conclusion, (m_idx, ax_idx))
                        break
                if job:
                    break
            if job is None:
                return
            yield from self._event3(job[0], job[1], report)

    def _cleanup(self, retracted: list[int], report: EventReport) -> None:
        added_el, removed_el, added_sub, removed_sub = self._sync_links()
        prunable: list[tuple[str, str]] = []
        for i in sorted(retracted):
            entry = self.beliefs.entry(i)
            if not isinstance(entry.label.from_list, ExternalSource):
                continue
            f = entry.formula
            if (m := membership_parts(f)) is not None:
                alpha, a = m
                if (a, alpha) in removed_el:
                    report.add("link", op="remove", link="element", source=a, target=alpha)
                    prunable.append((DOC, a))
            elif (m := subclass_parts(f)) is not None:
                alpha, beta = m
                if (alpha, beta) in removed_sub:
                    report.add("link", op="remove", link="subclass", source=alpha, target=beta)
                    prunable.append((CAT, alpha))
            elif (m := disjoint_parts(f)) is not None:
                alpha, beta = m
                pair = frozenset((alpha, beta))
                if pair in self.graph.disjoint_links:
                    self.graph.disjoint_links.discard(pair)
                    report.add("link", op="remove", link="disjoint", source=alpha, target=beta)
                    prunable.append((CAT, alpha))
                    prunable.append((CAT, beta))
        # edges suppressed as redundant come back once the bypass is gone
        for d, c in sorted(added_el):
            report.add("link", op="add", link="element", source=d, target=c,
                       reason="restored")
        for u, v in sorted(added_sub):
            report.add("link", op="add", link="subclass", source=u, target=v,
                       reason="restored")
        for ns, name in prunable:
            self._prune(ns, name, report)

    def _prune(self, ns: str, name: str, report: EventReport) -> None:
        # the subject node goes only when nothing else references it
        if self.graph.neighbors((ns, name)):
            return
        (self.graph.doc_nodes if ns == DOC else self.graph.cat_nodes).discard(name)
        report.add("node", op="remove", node=ns, name=name)

    def _event3(self, f: Formula, premises: tuple[int, int], report: EventReport):
        existing = self.beliefs.duplicate_of(f)
        if existing is not None:
            report.add("duplicate", existing=existing, formula=render(f))
            return
        idx = self._enter(report, f, Derived("AristotelianSyllogism", premises), SYNTHETIC)
        alpha, a = membership_parts(f)
        yield from self._disjoint_scan(idx, f, alpha, a, report)
        yield from self._ground_cascade(idx, f, alpha, a, report)

    def _event4(self, f: Formula, report: EventReport):
        alpha, beta = subclass_parts(f)
        if alpha in self.graph.cat_nodes and beta in self.graph.cat_nodes:
            if self.beliefs.find_active(DisjointnessOver(pair=(alpha, beta))):
                raise InputContradictsBeliefs(
                    f"{alpha} and {beta} are declared disjoint")
            if self.graph.would_create_redundant_path((CAT, alpha), (CAT, beta)):
                raise WouldCreateRedundantPath(f"{beta} is already an ancestor of {alpha}")
            if self.graph.would_create_loop(alpha, beta):
                raise WouldCreateLoop(f"{alpha} already subsumes {beta}")
        idx = self._enter(report, f, ExternalSource(), A_POSTERIORI)
        self._ensure_cat(alpha, report)
        self._ensure_cat(beta, report)
        _, removed_el, added_sub, removed_sub = self._sync_links()
        if (alpha, beta) in added_sub:
            report.add("link", op="add", link="subclass", source=alpha, target=beta)
        for d, c in sorted(removed_el):
            report.add("link", op="remove", link="element", source=d, target=c,
                       reason="redundant")
        for u, v in sorted(removed_sub):
            report.add("link", op="remove", link="subclass", source=u, target=v,
                       reason="redundant")
        # derive membership in beta for every document already in alpha
        cursor = 0
        while self.beliefs.entry(idx).active:
            hit = next(((i, g) for i, g in self.beliefs.find_active(
                GroundAtom(pred=(alpha, None))) if i > cursor), None)
            if hit is None:
                break
            minor_idx, minor_f = hit
            cursor = minor_idx
            conclusion = aristotelian_syllogism([f, minor_f])[0]
            yield from self._event3(conclusion, (minor_idx, idx), report)

    def _event5(self, f: Formula, report: EventReport):
        alpha, beta = disjoint_parts(f)
        idx = self._enter(report, f, ExternalSource(), A_POSTERIORI)
        self._ensure_cat(alpha, report)
        self._ensure_cat(beta, report)
        self.graph.disjoint_links.add(frozenset((alpha, beta)))
        report.add("link", op="add", link="disjoint", source=alpha, target=beta)
        while self.beliefs.entry(idx).active:
            conflict = self._find_disjoint_pair(f, alpha, beta)
            if conflict is None:
                break
            later, earlier = conflict
            yield from self._event2("ConflictDetection", (later, earlier, idx), report)

    def _find_disjoint_pair(self, axiom: Formula, alpha: str, beta: str):
        for ia, fa in self.beliefs.find_active(GroundAtom(pred=(alpha, None))):
            a = fa.args[0].name
            for ib, fb in self.beliefs.find_active(GroundAtom(pred=(beta, None), const=a)):
                conflict_detection([axiom, fa, fb])  # validates shapes
                return (max(ia, ib), min(ia, ib))
        return None

    def _disjoint_scan(self, new_idx: int, new_f: Formula, alpha: str, a: str,
                       report: EventReport):
        """Conflict Detection against every disjointness axiom covering alpha."""
        for dj_idx, dj_f in self.beliefs.find_active(DisjointnessOver()):
            if not self.beliefs.entry(new_idx).active:
                return
            if not self.beliefs.entry(dj_idx).active:
                continue
            p, q = disjoint_parts(dj_f)
            if alpha == p:
                other = q
            elif alpha == q:
                other = p
            else:
                continue
            hits = self.beliefs.find_active(GroundAtom(pred=(other, None), const=a))
            if not hits:
                continue
            old_idx, old_f = hits[0]
            if alpha == p:
                conflict_detection([dj_f, new_f, old_f])
            else:
                conflict_detection([dj_f, old_f, new_f])
            yield from self._event2("ConflictDetection", (new_idx, old_idx, dj_idx), report)

    def _ground_cascade(self, minor_idx: int, minor_f: Formula, alpha: str, a: str,
                        report: EventReport):
        """Apply every subsumption axiom for alpha to the minor premise, in
        ascending axiom order, recursing through event 3."""
        cursor = 0
        while self.beliefs.entry(minor_idx).active:
            hit = next(((i, g) for i, g in self.beliefs.find_active(
                UniversalImplication(antecedent=(alpha, None), consequent_negated=False))
                if i > cursor), None)
            if hit is None:
                break
            axiom_idx, axiom_f = hit
            cursor = axiom_idx
            conclusion = aristotelian_syllogism([axiom_f, minor_f])[0]
            yield from self._event3(conclusion, (minor_idx, axiom_idx), report)
