"""First-order language: terms, formulas, substitution, and logical identity.

The core connectives are negation, implication, the universal quantifier, and
the falsum constant.  Conjunction, disjunction, biconditional, and the
existential quantifier are definitional sugar:

    P & Q    :=  ~(P -> ~Q)
    P | Q    :=  (~P) -> Q
    P <-> Q  :=  (P -> Q) & (Q -> P)
    exists x.P  :=  ~forall x.~P

Atoms may carry a sort marker ("k" for kind predicates, "p" for property
predicates) and property atoms may carry an extralogical occurrence index.
Neither plays any role in logical identity: two formulas are identical when
their desugared cores are structurally equal with occurrence indexes stripped.
Bound variables are never renamed, so alpha-variants are distinct formulas.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Optional, Union

from .errors import NotSubstitutable


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __repr__(self):
        return self.name


Term = Union[Var, Const]


@dataclass(frozen=True)
class Atom:
    """Predicate application.  sort: None | "k" | "p"; occ: occurrence index."""

    pred: str
    args: tuple[Term, ...]
    sort: Optional[str] = None
    occ: Optional[int] = None


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: Var
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: Var
    body: "Formula"


Formula = Union[Atom, Bottom, Not, Imp, Forall, And, Or, Iff, Exists]

CORE_TYPES = (Atom, Bottom, Not, Imp, Forall)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield f and every subformula, preorder."""
    yield f
    if isinstance(f, (Not,)):
        yield from subformulas(f.body)
    elif isinstance(f, (Imp, And, Or, Iff)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, (Forall, Exists)):
        yield from subformulas(f.body)


def expand_sugar(f: Formula) -> Formula:
    """Rewrite into the negation/implication/universal core.  Idempotent."""
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, Not):
        return Not(expand_sugar(f.body))
    if isinstance(f, Imp):
        return Imp(expand_sugar(f.left), expand_sugar(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, expand_sugar(f.body))
    if isinstance(f, And):
        return Not(Imp(expand_sugar(f.left), Not(expand_sugar(f.right))))
    if isinstance(f, Or):
        return Imp(Not(expand_sugar(f.left)), expand_sugar(f.right))
    if isinstance(f, Iff):
        return expand_sugar(And(Imp(f.left, f.right), Imp(f.right, f.left)))
    if isinstance(f, Exists):
        return Not(Forall(f.var, Not(expand_sugar(f.body))))
    raise TypeError(f"not a formula: {f!r}")


def strip_occurrences(f: Formula) -> Formula:
    """Drop extralogical occurrence indexes everywhere."""
    if isinstance(f, Atom):
        return replace(f, occ=None) if f.occ is not None else f
    if isinstance(f, Bottom):
        return f
    if isinstance(f, Not):
        return Not(strip_occurrences(f.body))
    if isinstance(f, Imp):
        return Imp(strip_occurrences(f.left), strip_occurrences(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, strip_occurrences(f.body))
    if isinstance(f, And):
        return And(strip_occurrences(f.left), strip_occurrences(f.right))
    if isinstance(f, Or):
        return Or(strip_occurrences(f.left), strip_occurrences(f.right))
    if isinstance(f, Iff):
        return Iff(strip_occurrences(f.left), strip_occurrences(f.right))
    if isinstance(f, Exists):
        return Exists(f.var, strip_occurrences(f.body))
    raise TypeError(f"not a formula: {f!r}")


def identity_key(f: Formula) -> Formula:
    """Canonical form used for logical identity."""
    return expand_sugar(strip_occurrences(f))


def identical(a: Formula, b: Formula) -> bool:
    return identity_key(a) == identity_key(b)


def free_variables(f: Formula) -> frozenset[str]:
    def walk(g: Formula, bound: frozenset[str]) -> frozenset[str]:
        if isinstance(g, Atom):
            return frozenset(t.name for t in g.args
                             if isinstance(t, Var) and t.name not in bound)
        if isinstance(g, Bottom):
            return frozenset()
        if isinstance(g, Not):
            return walk(g.body, bound)
        if isinstance(g, (Imp, And, Or, Iff)):
            return walk(g.left, bound) | walk(g.right, bound)
        if isinstance(g, (Forall, Exists)):
            return walk(g.body, bound | {g.var.name})
        raise TypeError(f"not a formula: {g!r}")

    return walk(f, frozenset())


def constants(f: Formula) -> frozenset[str]:
    out = set()
    for g in subformulas(f):
        if isinstance(g, Atom):
            out.update(t.name for t in g.args if isinstance(t, Const))
    return frozenset(out)


def predicates(f: Formula) -> frozenset[tuple[str, int]]:
    """Predicate symbols with arities."""
    out = set()
    for g in subformulas(f):
        if isinstance(g, Atom):
            out.add((g.pred, len(g.args)))
    return frozenset(out)


def substitutable(f: Formula, x: str, t: Term) -> bool:
    """True iff t may replace free x in f without a variable of t being captured."""
    if isinstance(t, Const):
        return True
    tname = t.name
    if tname == x:
        return True

    def walk(g: Formula, bound: frozenset[str]) -> bool:
        if isinstance(g, Atom):
            # a free occurrence of x under a binder for t's variable is capture
            has_free_x = any(isinstance(a, Var) and a.name == x for a in g.args)
            return not (has_free_x and x not in bound and tname in bound)
        if isinstance(g, Bottom):
            return True
        if isinstance(g, Not):
            return walk(g.body, bound)
        if isinstance(g, (Imp, And, Or, Iff)):
            return walk(g.left, bound) and walk(g.right, bound)
        if isinstance(g, (Forall, Exists)):
            if g.var.name == x:
                return True  # no free occurrence of x below
            return walk(g.body, bound | {g.var.name})
        raise TypeError(f"not a formula: {g!r}")

    return walk(f, frozenset())


def substitute(f: Formula, bindings: dict[str, Term]) -> Formula:
    """Simultaneously replace free occurrences; fail fast on any capture."""
    for x, t in bindings.items():
        if not substitutable(f, x, t):
            raise NotSubstitutable(f"{t!r} is not substitutable for {x} here")
    return _subst(f, bindings)


def _subst(f: Formula, b: dict[str, Term]) -> Formula:
    if not b:
        return f
    if isinstance(f, Atom):
        args = tuple(b.get(a.name, a) if isinstance(a, Var) else a for a in f.args)
        return replace(f, args=args) if args != f.args else f
    if isinstance(f, Bottom):
        return f
    if isinstance(f, Not):
        return Not(_subst(f.body, b))
    if isinstance(f, Imp):
        return Imp(_subst(f.left, b), _subst(f.right, b))
    if isinstance(f, And):
        return And(_subst(f.left, b), _subst(f.right, b))
    if isinstance(f, Or):
        return Or(_subst(f.left, b), _subst(f.right, b))
    if isinstance(f, Iff):
        return Iff(_subst(f.left, b), _subst(f.right, b))
    if isinstance(f, Forall):
        inner = {k: v for k, v in b.items() if k != f.var.name}
        return Forall(f.var, _subst(f.body, inner))
    if isinstance(f, Exists):
        inner = {k: v for k, v in b.items() if k != f.var.name}
        return Exists(f.var, _subst(f.body, inner))
    raise TypeError(f"not a formula: {f!r}")
