"""The derivation path: labeled formulas with time stamps, from/to lists,
status, entrenchment, and knowledge category, plus the evolving symbol set.

Entries are append-only and never deleted; retraction flips status from bel
to disbel.  No two active entries may be logically identical (desugared,
occurrence-blind).  The path clock normally assigns contiguous time stamps;
controllers that burn a step without entering anything (a blocked or dropped
derivation) advance the clock through ``skip_step``, which is why an index
sequence may have gaps.

Derived entries are categorized synthetic: their derivations employ
extralogical axioms and extralogical rules.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Union

from .errors import DuplicateActive, UnknownIndex
from .kernel import RULE_TAGS
from .syntax import (
    And,
    Atom,
    Const,
    Forall,
    Formula,
    Imp,
    Not,
    Var,
    constants as formula_constants,
    identity_key,
    predicates as formula_predicates,
)

BEL = "bel"
DISBEL = "disbel"

A_PRIORI = "aPriori"
A_POSTERIORI = "aPosteriori"
ANALYTIC = "analytic"
SYNTHETIC = "synthetic"

CATEGORIES = (A_PRIORI, A_POSTERIORI, ANALYTIC, SYNTHETIC)

INPUT_ENTRENCHMENT = 0.5
LOGICAL_AXIOM_ENTRENCHMENT = 1.0


@dataclass(frozen=True)
class ExternalSource:
    tag: str = "hu"


@dataclass(frozen=True)
class Derived:
    rule: str
    premises: tuple[int, ...]


FromList = Union[ExternalSource, Derived]


@dataclass
class Label:
    time_stamp: int
    from_list: FromList
    to_list: list[int]
    status: str
    entrenchment: float
    category: str


@dataclass
class Entry:
    formula: Formula
    label: Label

    @property
    def index(self) -> int:
        return self.label.time_stamp

    @property
    def active(self) -> bool:
        return self.label.status == BEL


# --- find_active patterns ---------------------------------------------------

PredSel = Optional[tuple[Optional[str], Optional[str]]]
# (symbol, sort) selector: None = match anything; a None symbol inside the
# tuple matches any name of that sort


@dataclass(frozen=True)
class GroundAtom:
    """alpha(a), optionally negated; None fields are wildcards."""
    pred: PredSel = None
    const: Optional[str] = None
    negated: bool = False


@dataclass(frozen=True)
class UniversalImplication:
    """forall x.(alpha(x) -> beta(x)) or with negated consequent."""
    antecedent: PredSel = None
    consequent: PredSel = None
    consequent_negated: Optional[bool] = None


@dataclass(frozen=True)
class DisjointnessOver:
    """forall x.~(alpha(x) & beta(x)); pair order-insensitive when given."""
    pair: Optional[tuple[str, str]] = None


Pattern = Union[GroundAtom, UniversalImplication, DisjointnessOver]


def _sel_matches(sel: PredSel, atom: Atom) -> bool:
    if sel is None:
        return True
    name, sort = sel
    return (name is None or atom.pred == name) and atom.sort == sort


def _unary_var_atom(f: Formula, var: Var) -> Optional[Atom]:
    if isinstance(f, Atom) and f.args == (var,):
        return f
    return None


def match_pattern(pattern: Pattern, f: Formula) -> bool:
    if isinstance(pattern, GroundAtom):
        g = f
        if pattern.negated:
            if not isinstance(g, Not):
                return False
            g = g.body
        if not isinstance(g, Atom) or len(g.args) != 1:
            return False
        arg = g.args[0]
        if not isinstance(arg, Const):
            return False
        if pattern.const is not None and arg.name != pattern.const:
            return False
        return _sel_matches(pattern.pred, g)
    if isinstance(pattern, UniversalImplication):
        if not isinstance(f, Forall) or not isinstance(f.body, Imp):
            return False
        ant = _unary_var_atom(f.body.left, f.var)
        cons = f.body.right
        negated = isinstance(cons, Not)
        if negated:
            cons = cons.body
        cons = _unary_var_atom(cons, f.var)
        if ant is None or cons is None:
            return False
        if pattern.consequent_negated is not None and negated != pattern.consequent_negated:
            return False
        return _sel_matches(pattern.antecedent, ant) and _sel_matches(pattern.consequent, cons)
    if isinstance(pattern, DisjointnessOver):
        if (not isinstance(f, Forall) or not isinstance(f.body, Not)
                or not isinstance(f.body.body, And)):
            return False
        left = _unary_var_atom(f.body.body.left, f.var)
        right = _unary_var_atom(f.body.body.right, f.var)
        if left is None or right is None:
            return False
        if pattern.pair is not None:
            names = {left.pred, right.pred}
            if names != set(pattern.pair):
                return False
        return True
    raise TypeError(f"not a pattern: {pattern!r}")


# --- the belief set ---------------------------------------------------------

class BeliefSet:
    """Mutable single-owner derivation path with its symbol set and clock."""

    def __init__(self):
        self.entries: dict[int, Entry] = {}
        self.symbol_set: set[tuple] = set()
        self.next_index = 1
        self._active_keys: dict[Formula, int] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, index: int) -> Entry:
        try:
            return self.entries[index]
        except KeyError:
            raise UnknownIndex(f"no entry {index}") from None

    def in_order(self) -> Iterator[Entry]:
        for idx in sorted(self.entries):
            yield self.entries[idx]

    def actives(self) -> Iterator[Entry]:
        return (e for e in self.in_order() if e.active)

    def duplicate_of(self, f: Formula) -> Optional[int]:
        """Index of the active entry logically identical to f, if any."""
        return self._active_keys.get(identity_key(f))

    def skip_step(self) -> int:
        """Burn one path step without an entry; returns the consumed index."""
        idx = self.next_index
        self.next_index += 1
        return idx

    def enter(self, f: Formula, origin: FromList,
              entrenchment: float = INPUT_ENTRENCHMENT,
              category: str = A_POSTERIORI) -> int:
        existing = self.duplicate_of(f)
        if existing is not None:
            raise DuplicateActive(existing)
        idx = self.next_index
        self.next_index += 1
        label = Label(idx, origin, [], BEL, entrenchment, category)
        self.entries[idx] = Entry(f, label)
        self._active_keys[identity_key(f)] = idx
        for name, arity in formula_predicates(f):
            self.symbol_set.add(("pred", name, arity))
        for name in formula_constants(f):
            self.symbol_set.add(("const", name))
        if isinstance(origin, Derived):
            for p in origin.premises:
                to = self.entry(p).label.to_list
                if idx not in to:
                    to.append(idx)
        return idx

    def set_status(self, index: int, status: str) -> None:
        e = self.entry(index)
        if e.label.status == status:
            return
        e.label.status = status
        key = identity_key(e.formula)
        if status == DISBEL:
            if self._active_keys.get(key) == index:
                del self._active_keys[key]
        else:
            existing = self._active_keys.get(key)
            if existing is not None and existing != index:
                raise DuplicateActive(existing)
            self._active_keys[key] = index

    def find_active(self, pattern: Pattern) -> list[tuple[int, Formula]]:
        """Active entries matching the pattern, ascending time stamp."""
        return [(e.index, e.formula) for e in self.actives()
                if match_pattern(pattern, e.formula)]

    def theory_view(self) -> tuple[set, list[tuple[int, Formula]]]:
        """(language, active extralogical axioms)."""
        axioms = [(e.index, e.formula) for e in self.actives()
                  if isinstance(e.label.from_list, ExternalSource)]
        return set(self.symbol_set), axioms


def from_list_text(origin: FromList) -> str:
    """Short printable form: {hu} or {AS, 9, 1}."""
    if isinstance(origin, ExternalSource):
        return "{" + origin.tag + "}"
    tag = RULE_TAGS.get(origin.rule, origin.rule)
    return "{" + ", ".join([tag] + [str(p) for p in origin.premises]) + "}"
