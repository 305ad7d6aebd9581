"""Multiple-inheritance reasoner: typed predicates over a specificity-ranked
hierarchy of object, kind, and property nodes, with exceptions resolved by
blocking and contradictions by belief revision.

User inputs take four shapes: an object-kind atom alpha^k(a), a subkind axiom
forall x.(alpha^k(x) -> beta^k(x)), and property axioms
forall x.(alpha^k(x) -> beta^p(x)) / forall x.(alpha^k(x) -> ~beta^p(x)).
Property literals are never input directly; they only arise by derivation.
Each property axiom mints a fresh occurrence index for its property symbol,
embedded in the stored formula, and hangs a property node off the antecedent
kind.  Object-kind and subkind links are displayed as the transitive
reduction of the active axioms' edges, as in the taxonomy controller;
property nodes participate in no path.

Specificity: a node's addresses encode its root paths; a property occurrence
inherits the address set of its kind.  Occurrence m strictly dominates d when
some address of m properly extends one of d.  A derived property literal is
dropped when the most specific opposite-polarity occurrence strictly
dominates the deriving one (the inheritance is blocked); incomparable
opposites both enter and Contradiction Detection hands the conflict to
Dialectical Belief Revision.

Event types: 1 = object-kind input, 2 = derived kind atom, 3/4 = derived
positive/negative property literal (a dropped one still burns a path step,
so time stamps may skip), 5 = contradiction handling, 6 = subkind input,
7/8 = property axiom inputs.  Events run as generators so a revision needing
an interactive choice can suspend the whole cascade.  After a revision the
controller re-derives conclusions that remain supported by surviving axioms,
keeping the belief set in step with the hierarchy.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .beliefs import (
    A_POSTERIORI,
    SYNTHETIC,
    BeliefSet,
    Derived,
    ExternalSource,
    GroundAtom,
    UniversalImplication,
)
from .errors import (
    DuplicateActive,
    MalformedInput,
    NotAnAxiom,
    WouldCreateLoop,
    WouldCreateRedundantPath,
)
from .events import EventReport
from .kernel import aristotelian_syllogism, contradiction_detection
from .revision import forward_retract, run_dbr
from .syntax import Atom, Bottom, Const, Forall, Formula, Imp, Not
from .text import render

KIND = "k"
PROP = "p"

OBJ = "obj"
KND = "kind"
PRP = "prop"

PropNode = tuple[str, bool, int]  # (property symbol, negated, occurrence index)
Address = tuple[int, ...]


def prop_node_label(node: PropNode) -> str:
    name, negated, occ = node
    return f"{'~' if negated else ''}{name}#{occ}"


def strictly_dominates(rank_a: set[Address], rank_b: set[Address]) -> bool:
    """Some address of a properly extends some address of b."""
    return any(len(a) > len(b) and a[:len(b)] == b
               for a in rank_a for b in rank_b)


@dataclass
class Hierarchy:
    object_nodes: set[str] = field(default_factory=set)
    kind_nodes: list[str] = field(default_factory=list)  # creation order
    property_nodes: set[PropNode] = field(default_factory=set)
    object_kind_links: set[tuple[str, str]] = field(default_factory=set)
    subkind_links: set[tuple[str, str]] = field(default_factory=set)  # (sub, super)
    has_property_links: set[tuple[str, PropNode]] = field(default_factory=set)
    link_seq: dict = field(default_factory=dict)  # edge key -> creation sequence
    _next_seq: int = 0

    # -- path structure ------------------------------------------------------

    def _stamp(self, key) -> None:
        self._next_seq += 1
        self.link_seq[key] = self._next_seq

    def kind_closure(self, kind: str) -> set[str]:
        seen = {kind}
        stack = [kind]
        while stack:
            k = stack.pop()
            for sub, sup in self.subkind_links:
                if sub == k and sup not in seen:
                    seen.add(sup)
                    stack.append(sup)
        return seen

    def ancestors_of_object(self, a: str) -> set[str]:
        out: set[str] = set()
        for obj, kind in self.object_kind_links:
            if obj == a:
                out |= self.kind_closure(kind)
        return out

    def apply_path_links(self, keep_ok: set[tuple[str, str]],
                         keep_sub: set[tuple[str, str]]):
        """Replace the displayed object-kind/subkind links; returns the delta
        (added ok, removed ok, added sub, removed sub)."""
        delta = (keep_ok - self.object_kind_links,
                 self.object_kind_links - keep_ok,
                 keep_sub - self.subkind_links,
                 self.subkind_links - keep_sub)
        for a, k in sorted(delta[1]):
            self.link_seq.pop(("ok", a, k), None)
        for s, p in sorted(delta[3]):
            self.link_seq.pop(("sub", s, p), None)
        for a, k in sorted(delta[0]):
            self._stamp(("ok", a, k))
        for s, p in sorted(delta[2]):
            self._stamp(("sub", s, p))
        self.object_kind_links = set(keep_ok)
        self.subkind_links = set(keep_sub)
        return delta

    def add_property(self, kind: str, node: PropNode) -> None:
        self.property_nodes.add(node)
        self.has_property_links.add((kind, node))
        self._stamp(("hp", kind, node))

    def remove_property(self, kind: str, node: PropNode) -> None:
        self.property_nodes.discard(node)
        self.has_property_links.discard((kind, node))
        self.link_seq.pop(("hp", kind, node), None)

    def neighbors(self, node: tuple) -> set[tuple]:
        typ, val = node
        out: set[tuple] = set()
        for o, k in self.object_kind_links:
            if typ == OBJ and o == val:
                out.add((KND, k))
            if typ == KND and k == val:
                out.add((OBJ, o))
        for s, p in self.subkind_links:
            if typ == KND and s == val:
                out.add((KND, p))
            if typ == KND and p == val:
                out.add((KND, s))
        for k, pn in self.has_property_links:
            if typ == KND and k == val:
                out.add((PRP, pn))
            if typ == PRP and pn == val:
                out.add((KND, k))
        return out

    # -- specificity ---------------------------------------------------------

    def compute_addresses(self) -> dict[tuple, set[Address]]:
        """Addresses of object and kind nodes: roots numbered in kind creation
        order, children numbered per parent in link creation order.  Property
        nodes are excluded; a node reached along several paths holds one
        address per path."""
        children: dict[str, list[tuple[int, tuple]]] = {}
        for sub, sup in self.subkind_links:
            children.setdefault(sup, []).append(
                (self.link_seq[("sub", sub, sup)], (KND, sub)))
        for obj, kind in self.object_kind_links:
            children.setdefault(kind, []).append(
                (self.link_seq[("ok", obj, kind)], (OBJ, obj)))
        addresses: dict[tuple, set[Address]] = {}

        def assign(key: tuple, addr: Address) -> None:
            addresses.setdefault(key, set()).add(addr)
            if key[0] == KND:
                ordered = sorted(children.get(key[1], []))
                for i, (_, child) in enumerate(ordered, start=1):
                    assign(child, addr + (i,))

        roots = [k for k in self.kind_nodes
                 if not any(sub == k for sub, _ in self.subkind_links)]
        for i, root in enumerate(roots, start=1):
            assign((KND, root), (i,))
        return addresses

    def property_kind(self, node: PropNode) -> Optional[str]:
        for kind, pn in self.has_property_links:
            if pn == node:
                return kind
        return None

    def occurrence_rank(self, node: PropNode,
                        addresses: Optional[dict] = None) -> set[Address]:
        """A property node inherits the address set of its kind."""
        kind = self.property_kind(node)
        if kind is None:
            return set()
        if addresses is None:
            addresses = self.compute_addresses()
        return addresses.get((KND, kind), set())

    def most_specific_occurrence(self, prop: str, a: str
                                 ) -> Optional[tuple[PropNode, bool]]:
        """Among occurrences of prop (either polarity) on ancestor kinds of a:
        a maximal one under strict dominance, plus whether it strictly
        dominates every other such occurrence."""
        addresses = self.compute_addresses()
        ancestors = self.ancestors_of_object(a)
        cands = sorted({pn for kind, pn in self.has_property_links
                        if pn[0] == prop and kind in ancestors})
        if not cands:
            return None
        ranks = {pn: self.occurrence_rank(pn, addresses) for pn in cands}
        maximal = [pn for pn in cands
                   if not any(strictly_dominates(ranks[o], ranks[pn])
                              for o in cands if o != pn)]
        pick = min(maximal, key=lambda pn: (sorted(ranks[pn]), pn))
        dominates_all = all(strictly_dominates(ranks[pick], ranks[o])
                            for o in cands if o != pick)
        return pick, dominates_all


# input shape destructuring ---------------------------------------------------

def object_kind_parts(f: Formula) -> Optional[tuple[str, str]]:
    """alpha^k(a) -> (alpha, a)."""
    if (isinstance(f, Atom) and f.sort == KIND and len(f.args) == 1
            and isinstance(f.args[0], Const)):
        return f.pred, f.args[0].name
    return None


def subkind_parts(f: Formula) -> Optional[tuple[str, str]]:
    """forall x.(alpha^k(x) -> beta^k(x)) -> (alpha, beta)."""
    if isinstance(f, Forall) and isinstance(f.body, Imp):
        l, r = f.body.left, f.body.right
        if (isinstance(l, Atom) and isinstance(r, Atom)
                and l.sort == KIND and r.sort == KIND
                and l.args == (f.var,) and r.args == (f.var,)):
            return l.pred, r.pred
    return None


def property_axiom_parts(f: Formula) -> Optional[tuple[str, str, bool, Optional[int]]]:
    """forall x.(alpha^k(x) -> [~]beta^p(x)) -> (alpha, beta, negated, occ)."""
    if isinstance(f, Forall) and isinstance(f.body, Imp):
        l, r = f.body.left, f.body.right
        negated = isinstance(r, Not)
        if negated:
            r = r.body
        if (isinstance(l, Atom) and isinstance(r, Atom)
                and l.sort == KIND and r.sort == PROP
                and l.args == (f.var,) and r.args == (f.var,)):
            return l.pred, r.pred, negated, r.occ
    return None


def property_literal_parts(f: Formula) -> Optional[tuple[str, str, bool, Optional[int]]]:
    """[~]beta^p(a) -> (beta, a, negated, occ)."""
    negated = isinstance(f, Not)
    g = f.body if negated else f
    if (isinstance(g, Atom) and g.sort == PROP and len(g.args) == 1
            and isinstance(g.args[0], Const)):
        return g.pred, g.args[0].name, negated, g.occ
    return None


class MisController:
    """Owns the belief set and inheritance hierarchy for one MIS session."""

    mode = "MIS"

    def __init__(self, beliefs: Optional[BeliefSet] = None):
        self.beliefs = beliefs or BeliefSet()
        self.hierarchy = Hierarchy()
        self.auto = False  # AutoChooser toggle; interactive suspends
        self.occurrence_counters: dict[str, int] = {}

    # -- public entry points -------------------------------------------------

    def input(self, f: Formula, report: EventReport):
        """Dispatch one user input.  Generator (may yield a ChoiceRequest)."""
        existing = self.beliefs.duplicate_of(f)
        if existing is not None:
            raise DuplicateActive(existing)
        if object_kind_parts(f) is not None:
            yield from self._event1(f, report)
        elif (parts := subkind_parts(f)) is not None:
            if parts[0] == parts[1]:
                raise MalformedInput("a kind cannot subsume itself")
            yield from self._event6(f, report)
        elif property_axiom_parts(f) is not None:
            yield from self._event7_8(f, report)
        elif property_literal_parts(f) is not None:
            raise MalformedInput(
                "property literals are derived, not input directly")
        else:
            raise MalformedInput(
                "MIS inputs are alpha^k(a), forall x.(alpha^k(x) -> beta^k(x)), "
                "or forall x.(alpha^k(x) -> [~]beta^p(x))")

    def remove_link(self, axiom_index: int, report: EventReport):
        """Retract a link axiom and everything derived through it."""
        entry = self.beliefs.entry(axiom_index)
        if not entry.active or not isinstance(entry.label.from_list, ExternalSource):
            raise NotAnAxiom(f"entry {axiom_index} is not an active extralogical axiom")
        f = entry.formula
        if (object_kind_parts(f) is None and subkind_parts(f) is None
                and property_axiom_parts(f) is None):
            raise NotAnAxiom(f"entry {axiom_index} is not a link formula")
        flipped = forward_retract(self.beliefs, [axiom_index])
        report.add("removed", indexes=flipped)
        self._cleanup(flipped, report)
        yield from self._salvage(report)

    # -- shared helpers ------------------------------------------------------

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

    def _ensure_kind(self, name: str, report: EventReport) -> None:
        if name not in self.hierarchy.kind_nodes:
            self.hierarchy.kind_nodes.append(name)
            report.add("node", op="add", node=KND, name=name)

    def _ensure_object(self, name: str, report: EventReport) -> None:
        if name not in self.hierarchy.object_nodes:
            self.hierarchy.object_nodes.add(name)
            report.add("node", op="add", node=OBJ, name=name)

    def _link_axiom_edges(self) -> tuple[set[tuple[str, str]], set[tuple[str, str]]]:
        """Edges asserted by the active extralogical object-kind/subkind axioms."""
        object_kind: set[tuple[str, str]] = set()
        subkind: set[tuple[str, str]] = set()
        for e in self.beliefs.in_order():
            if not e.active or not isinstance(e.label.from_list, ExternalSource):
                continue
            if (m := object_kind_parts(e.formula)) is not None:
                object_kind.add((m[1], m[0]))
            elif (m := subkind_parts(e.formula)) is not None:
                subkind.add(m)
        return object_kind, subkind

    def _sync_links(self):
        """Reduce the displayed object-kind/subkind links to the transitive
        reduction of the active axioms' edges.  Returns the applied delta."""
        object_kind, subkind = self._link_axiom_edges()
        reach: dict[str, set[str]] = {}

        def closure(k: str) -> set[str]:
            if k not in reach:
                reach[k] = {k}
                for u, v in subkind:
                    if u == k:
                        reach[k] |= closure(v)
            return reach[k]

        keep_sub = {(u, v) for u, v in subkind
                    if not any(x == u and w != v and v in closure(w)
                               for x, w in subkind)}
        keep_ok = {(a, k) for a, k in object_kind
                   if not any(x == a and w != k and k in closure(w)
                              for x, w in object_kind)}
        return self.hierarchy.apply_path_links(keep_ok, keep_sub)

    # -- events --------------------------------------------------------------

    def _event1(self, f: Formula, report: EventReport):
        alpha, a = object_kind_parts(f)
        idx = self._enter(report, f, ExternalSource(), A_POSTERIORI)
        self._ensure_object(a, report)
        self._ensure_kind(alpha, report)
        added_ok, removed_ok, _, _ = self._sync_links()
        if (a, alpha) in added_ok:
            report.add("link", op="add", link="objectKind", source=a, target=alpha)
        else:
            report.add("link", op="skip", link="objectKind", source=a, target=alpha,
                       reason="redundant")
        for o, k in sorted(removed_ok):
            report.add("link", op="remove", link="objectKind", source=o, target=k,
                       reason="redundant")
        yield from self._kind_cascade(idx, f, alpha, a, report)
        yield from self._prop_cascade(idx, f, alpha, a, False, report)
        yield from self._prop_cascade(idx, f, alpha, a, True, report)

    def _event2(self, f: Formula, premises: tuple[int, int], report: EventReport):
        """Derived kind atom: enter and cascade; the hierarchy already shows
        the membership implicitly, so no link is added."""
        idx = self._enter(report, f, Derived("AristotelianSyllogism", premises),
                          SYNTHETIC)
        alpha, a = object_kind_parts(f)
        yield from self._kind_cascade(idx, f, alpha, a, report)
        yield from self._prop_cascade(idx, f, alpha, a, False, report)
        yield from self._prop_cascade(idx, f, alpha, a, True, report)

    def _kind_cascade(self, minor_idx: int, minor_f: Formula, alpha: str, a: str,
                      report: EventReport):
        cursor = 0
        while self.beliefs.entry(minor_idx).active:
            hit = next(((i, g) for i, g in self.beliefs.find_active(
                UniversalImplication(antecedent=(alpha, KIND), consequent=(None, KIND)))
                if i > cursor), None)
            if hit is None:
                break
            ax_idx, ax_f = hit
            cursor = ax_idx
            conclusion = aristotelian_syllogism([ax_f, minor_f])[0]
            existing = self.beliefs.duplicate_of(conclusion)
            if existing is not None:
                report.add("duplicate", existing=existing, formula=render(conclusion))
                continue
            yield from self._event2(conclusion, (minor_idx, ax_idx), report)

    def _prop_cascade(self, minor_idx: int, minor_f: Formula, alpha: str, a: str,
                      negated: bool, report: EventReport):
        cursor = 0
        while self.beliefs.entry(minor_idx).active:
            hit = next(((i, g) for i, g in self.beliefs.find_active(
                UniversalImplication(antecedent=(alpha, KIND), consequent=(None, PROP),
                                     consequent_negated=negated))
                if i > cursor), None)
            if hit is None:
                break
            ax_idx, ax_f = hit
            cursor = ax_idx
            conclusion = aristotelian_syllogism([ax_f, minor_f])[0]
            _, prop, neg, occ = property_axiom_parts(ax_f)
            yield from self._event3_4(conclusion, (minor_idx, ax_idx),
                                      (prop, neg, occ), report)

    def _property_verdict(self, literal: Formula, deriving: PropNode):
        """'blocked', an existing active index, or 'enter'."""
        prop, a, negated, _ = property_literal_parts(literal)
        m = self.hierarchy.most_specific_occurrence(prop, a)
        if m is not None:
            node, _ = m
            if node[1] != negated and strictly_dominates(
                    self.hierarchy.occurrence_rank(node),
                    self.hierarchy.occurrence_rank(deriving)):
                return "blocked"
        existing = self.beliefs.duplicate_of(literal)
        if existing is not None:
            return existing
        return "enter"

    def _event3_4(self, literal: Formula, premises: tuple[int, int],
                  deriving: PropNode, report: EventReport):
        """Derived property literal: blocked and duplicate derivations burn a
        path step without entering; an entered literal is checked against its
        active opposite, either polarity first."""
        verdict = self._property_verdict(literal, deriving)
        if verdict == "blocked":
            idx = self.beliefs.skip_step()
            report.add("step-consumed", index=idx, reason="blocked",
                       formula=render(literal))
            return
        if verdict != "enter":
            idx = self.beliefs.skip_step()
            report.add("step-consumed", index=idx, reason="duplicate",
                       formula=render(literal), existing=verdict)
            return
        idx = self._enter(report, literal,
                          Derived("AristotelianSyllogism", premises), SYNTHETIC)
        prop, a, negated, _ = property_literal_parts(literal)
        while self.beliefs.entry(idx).active:
            opposite = self.beliefs.find_active(
                GroundAtom(pred=(prop, PROP), const=a, negated=not negated))
            if not opposite:
                break
            old_idx, old_f = opposite[0]
            contradiction_detection([literal, old_f])  # validates the pair
            yield from self._event5((idx, old_idx), report)

    def _event5(self, premises: tuple[int, int], report: EventReport):
        """Enter falsum, revise, clean the hierarchy, re-derive survivors."""
        bot = self._enter(report, Bottom(),
                          Derived("ContradictionDetection", premises), SYNTHETIC)
        case = yield from run_dbr(self.beliefs, bot, self.auto)
        report.add("revision", contradiction=bot, culprits=case.culprits,
                   chosen=case.chosen, retracted=case.retracted)
        self._cleanup(case.retracted, report)
        yield from self._salvage(report)

    def _cleanup(self, retracted: list[int], report: EventReport) -> None:
        added_ok, removed_ok, added_sub, removed_sub = self._sync_links()
        prunable: list[tuple] = []
        for i in sorted(retracted):
            entry = self.beliefs.entry(i)
            if not isinstance(entry.label.from_list, ExternalSource):
                continue
            f = entry.formula
            if (m := object_kind_parts(f)) is not None:
                alpha, a = m
                if (a, alpha) in removed_ok:
                    report.add("link", op="remove", link="objectKind",
                               source=a, target=alpha)
                    prunable.append((OBJ, a))
            elif (m := subkind_parts(f)) is not None:
                alpha, beta = m
                if (alpha, beta) in removed_sub:
                    report.add("link", op="remove", link="subkind",
                               source=alpha, target=beta)
                    prunable.append((KND, alpha))
            elif (m := property_axiom_parts(f)) is not None:
                alpha, prop, negated, occ = m
                node = (prop, negated, occ)
                if (alpha, node) in self.hierarchy.has_property_links:
                    self.hierarchy.remove_property(alpha, node)
                    report.add("link", op="remove", link="hasProperty",
                               source=alpha, target=prop_node_label(node))
                    report.add("node", op="remove", node=PRP,
                               name=prop_node_label(node))
                    prunable.append((KND, alpha))
        for o, k in sorted(added_ok):
            report.add("link", op="add", link="objectKind", source=o, target=k,
                       reason="restored")
        for u, v in sorted(added_sub):
            report.add("link", op="add", link="subkind", source=u, target=v,
                       reason="restored")
        for node in prunable:
            self._prune(node, report)

    def _prune(self, node: tuple, report: EventReport) -> None:
        # the subject node goes only when nothing else references it
        if self.hierarchy.neighbors(node):
            return
        typ, name = node
        if typ == OBJ:
            if name not in self.hierarchy.object_nodes:
                return
            self.hierarchy.object_nodes.discard(name)
        else:
            if name not in self.hierarchy.kind_nodes:
                return
            self.hierarchy.kind_nodes.remove(name)
        report.add("node", op="remove", node=typ, name=name)

    def _salvage(self, report: EventReport):
        """Re-derive conclusions whose earlier entries died with a retraction
        but which the surviving axioms still support."""
        while True:
            job = None
            for m_idx, m_f in self.beliefs.find_active(GroundAtom(pred=(None, KIND))):
                alpha = m_f.pred
                for ax_idx, ax_f in self.beliefs.find_active(
                        UniversalImplication(antecedent=(alpha, KIND),
                                             consequent=(None, KIND))):
                    conclusion = aristotelian_syllogism([ax_f, m_f])[0]
                    if self.beliefs.duplicate_of(conclusion) is None:
                        job = ("kind", conclusion, (m_idx, ax_idx), None)
                        break
                if job:
                    break
                for ax_idx, ax_f in self.beliefs.find_active(
                        UniversalImplication(antecedent=(alpha, KIND),
                                             consequent=(None, PROP))):
                    conclusion = aristotelian_syllogism([ax_f, m_f])[0]
                    _, prop, neg, occ = property_axiom_parts(ax_f)
                    deriving = (prop, neg, occ)
                    if self._property_verdict(conclusion, deriving) == "enter":
                        job = ("prop", conclusion, (m_idx, ax_idx), deriving)
                        break
                if job:
                    break
            if job is None:
                return
            kind, conclusion, premises, deriving = job
            if kind == "kind":
                yield from self._event2(conclusion, premises, report)
            else:
                yield from self._event3_4(conclusion, premises, deriving, report)

    def _event6(self, f: Formula, report: EventReport):
        alpha, beta = subkind_parts(f)
        if alpha in self.hierarchy.kind_nodes and beta in self.hierarchy.kind_nodes:
            if beta in self.hierarchy.kind_closure(alpha) - {alpha}:
                raise WouldCreateRedundantPath(
                    f"{beta} is already an ancestor of {alpha}")
            if alpha in self.hierarchy.kind_closure(beta):
                raise WouldCreateLoop(f"{alpha} already subsumes {beta}")
        idx = self._enter(report, f, ExternalSource(), A_POSTERIORI)
        self._ensure_kind(alpha, report)
        self._ensure_kind(beta, report)
        _, removed_ok, added_sub, removed_sub = self._sync_links()
        if (alpha, beta) in added_sub:
            report.add("link", op="add", link="subkind", source=alpha, target=beta)
        for o, k in sorted(removed_ok):
            report.add("link", op="remove", link="objectKind", source=o, target=k,
                       reason="redundant")
        for u, v in sorted(removed_sub):
            report.add("link", op="remove", link="subkind", source=u, target=v,
                       reason="redundant")
        # derive membership in beta for every object already of kind alpha
        cursor = 0
        while self.beliefs.entry(idx).active:
            hit = next(((i, g) for i, g in self.beliefs.find_active(
                GroundAtom(pred=(alpha, KIND))) if i > cursor), None)
            if hit is None:
                break
            minor_idx, minor_f = hit
            cursor = minor_idx
            conclusion = aristotelian_syllogism([f, minor_f])[0]
            existing = self.beliefs.duplicate_of(conclusion)
            if existing is not None:
                report.add("duplicate", existing=existing, formula=render(conclusion))
                continue
            yield from self._event2(conclusion, (minor_idx, idx), report)

    def _event7_8(self, f: Formula, report: EventReport):
        alpha, prop, negated, _ = property_axiom_parts(f)
        occ = self.occurrence_counters.get(prop, 0) + 1
        self.occurrence_counters[prop] = occ
        cons = Atom(prop, (f.var,), sort=PROP, occ=occ)
        body = Imp(f.body.left, Not(cons) if negated else cons)
        stored = Forall(f.var, body)
        idx = self._enter(report, stored, ExternalSource(), A_POSTERIORI)
        self._ensure_kind(alpha, report)
        node: PropNode = (prop, negated, occ)
        self.hierarchy.add_property(alpha, node)
        report.add("node", op="add", node=PRP, name=prop_node_label(node))
        report.add("link", op="add", link="hasProperty", source=alpha,
                   target=prop_node_label(node))
        cursor = 0
        while self.beliefs.entry(idx).active:
            hit = next(((i, g) for i, g in self.beliefs.find_active(
                GroundAtom(pred=(alpha, KIND))) if i > cursor), None)
            if hit is None:
                break
            minor_idx, minor_f = hit
            cursor = minor_idx
            conclusion = aristotelian_syllogism([stored, minor_f])[0]
            yield from self._event3_4(conclusion, (minor_idx, idx), node, report)
