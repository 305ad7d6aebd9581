"""Axiom schemas, primitive inference rules, and the derived rules.

Schemas S1-S3 are the propositional Hilbert axioms, S4 defines falsum, S5 is
universal instantiation, S6 moves a universal across an antecedent in which
its variable is not free.  Primitive rules are Modus Ponens and
Generalization; schema instantiation plays the role of the axiom-introducing
rules.  The derived rules are the ones controllers actually run; they are
implemented directly and validated semantically in the test suite rather than
by replaying proof-theoretic derivations.

Matching for the syllogism and detection rules is blind to extralogical
occurrence indexes, and a conclusion inherits the consequent's indexes
unchanged.
"""
from __future__ import annotations

from typing import Optional

from .errors import (
    ArityMismatch,
    NotSubstitutable,
    PremiseShapeMismatch,
    UnificationFailure,
    VariableFreeInAntecedent,
)
from .syntax import (
    And,
    Atom,
    Bottom,
    Const,
    Exists,
    Forall,
    Formula,
    Iff,
    Imp,
    Not,
    Or,
    Term,
    Var,
    free_variables,
    identical,
    identity_key,
    substitutable,
    substitute,
)

SCHEMAS = ("S1", "S2", "S3", "S4", "S5", "S6")


def instantiate_schema(schema: str, metas: list[Formula],
                       x: Optional[Var] = None, t: Optional[Term] = None) -> Formula:
    """Return the logical-axiom instance of the named schema."""
    if schema == "S1":
        _need(metas, 2, schema)
        a, b = metas
        return Imp(a, Imp(b, a))
    if schema == "S2":
        _need(metas, 3, schema)
        a, b, c = metas
        return Imp(Imp(a, Imp(b, c)), Imp(Imp(a, b), Imp(a, c)))
    if schema == "S3":
        _need(metas, 2, schema)
        a, b = metas
        return Imp(Imp(Not(a), Not(b)), Imp(b, a))
    if schema == "S4":
        _need(metas, 1, schema)
        a = metas[0]
        return Iff(Bottom(), And(a, Not(a)))
    if schema == "S5":
        _need(metas, 1, schema)
        if x is None or t is None:
            raise ArityMismatch("S5 needs a variable and a term")
        p = metas[0]
        if not substitutable(p, x.name, t):
            raise NotSubstitutable(f"{t!r} not substitutable for {x.name}")
        return Imp(Forall(x, p), substitute(p, {x.name: t}))
    if schema == "S6":
        _need(metas, 2, schema)
        if x is None:
            raise ArityMismatch("S6 needs a variable")
        p, q = metas
        if x.name in free_variables(p):
            raise VariableFreeInAntecedent(f"{x.name} occurs free in the antecedent")
        return Imp(Forall(x, Imp(p, q)), Imp(p, Forall(x, q)))
    raise ArityMismatch(f"unknown schema {schema}")


def _need(metas: list[Formula], n: int, schema: str) -> None:
    if len(metas) != n:
        raise ArityMismatch(f"{schema} takes {n} formulas, got {len(metas)}")


def apply_primitive(rule: str, premises: list[Formula],
                    x: Optional[Var] = None) -> Formula:
    if rule == "ModusPonens":
        if len(premises) != 2:
            raise PremiseShapeMismatch("Modus Ponens takes two premises")
        p, imp = premises
        if not isinstance(imp, Imp) or not identical(imp.left, p):
            raise PremiseShapeMismatch("second premise must be P -> Q for the first P")
        return imp.right
    if rule == "Generalization":
        if len(premises) != 1 or x is None:
            raise PremiseShapeMismatch("Generalization takes one premise and a variable")
        return Forall(x, premises[0])
    raise PremiseShapeMismatch(f"unknown primitive rule {rule}")


# --- witness matching -------------------------------------------------------

def match_witness(pattern: Formula, ground: Formula, x: str) -> Optional[Const]:
    """Find the constant a with ground = pattern(a/x), ignoring occurrence indexes.

    Raises PremiseShapeMismatch when the trees differ structurally and
    UnificationFailure when free occurrences of x map to different constants.
    Returns None when x has no free occurrence in the pattern.
    """
    witnesses: set[str] = set()

    def walk(p: Formula, g: Formula, bound: frozenset[str]) -> None:
        if isinstance(p, Atom):
            if (not isinstance(g, Atom) or p.pred != g.pred or p.sort != g.sort
                    or len(p.args) != len(g.args)):
                raise PremiseShapeMismatch("atom mismatch")
            for pa, ga in zip(p.args, g.args):
                if isinstance(pa, Var) and pa.name == x and x not in bound:
                    if not isinstance(ga, Const):
                        raise PremiseShapeMismatch("witness position is not a constant")
                    witnesses.add(ga.name)
                elif pa != ga:
                    raise PremiseShapeMismatch("term mismatch")
            return
        if isinstance(p, Bottom):
            if not isinstance(g, Bottom):
                raise PremiseShapeMismatch("shape mismatch")
            return
        if isinstance(p, Not):
            if not isinstance(g, Not):
                raise PremiseShapeMismatch("shape mismatch")
            walk(p.body, g.body, bound)
            return
        if isinstance(p, (Imp, And, Or, Iff)):
            if type(g) is not type(p):
                raise PremiseShapeMismatch("shape mismatch")
            walk(p.left, g.left, bound)
            walk(p.right, g.right, bound)
            return
        if isinstance(p, (Forall, Exists)):
            if type(g) is not type(p) or p.var != g.var:
                raise PremiseShapeMismatch("shape mismatch")
            walk(p.body, g.body, bound | {p.var.name})
            return
        raise PremiseShapeMismatch(f"not a formula: {p!r}")

    walk(pattern, ground, frozenset())
    if not witnesses:
        return None
    if len(witnesses) > 1:
        raise UnificationFailure(f"conflicting witnesses {sorted(witnesses)}")
    return Const(witnesses.pop())


# --- derived rules ----------------------------------------------------------

def hypothetical_syllogism(premises: list[Formula]) -> list[Formula]:
    if len(premises) != 2:
        raise PremiseShapeMismatch("Hypothetical Syllogism takes two premises")
    pq, qr = premises
    if not isinstance(pq, Imp) or not isinstance(qr, Imp):
        raise PremiseShapeMismatch("both premises must be implications")
    if not identical(pq.right, qr.left):
        raise PremiseShapeMismatch("middle formulas differ")
    return [Imp(pq.left, qr.right)]


def aristotelian_syllogism(premises: list[Formula]) -> list[Formula]:
    """From forall x.(P -> Q) and P(a/x) infer Q(a/x)."""
    if len(premises) != 2:
        raise PremiseShapeMismatch("Aristotelian Syllogism takes two premises")
    univ, minor = premises
    if not isinstance(univ, Forall) or not isinstance(univ.body, Imp):
        raise PremiseShapeMismatch("first premise must be forall x.(P -> Q)")
    x = univ.var.name
    a = match_witness(univ.body.left, minor, x)
    if a is None:
        if x in free_variables(univ.body.right):
            raise UnificationFailure("witness undetermined")
        return [univ.body.right]
    return [substitute(univ.body.right, {x: a})]


def subsumption(premises: list[Formula]) -> list[Formula]:
    """From forall x.(a(x) -> b(x)) and forall x.(b(x) -> c(x)) infer forall x.(a(x) -> c(x))."""
    if len(premises) != 2:
        raise PremiseShapeMismatch("Subsumption takes two premises")
    first, second = premises
    ab = _unary_imp_parts(first)
    bc = _unary_imp_parts(second)
    if first.var != second.var:
        raise PremiseShapeMismatch("quantified variables differ")
    if ab[1] != bc[0]:
        raise PremiseShapeMismatch("middle predicates differ")
    x = first.var
    return [Forall(x, Imp(ab[0], bc[1]))]


def _unary_imp_parts(f: Formula):
    if (isinstance(f, Forall) and isinstance(f.body, Imp)
            and isinstance(f.body.left, Atom) and isinstance(f.body.right, Atom)
            and f.body.left.args == (f.var,) and f.body.right.args == (f.var,)):
        return f.body.left, f.body.right
    raise PremiseShapeMismatch("premise must be forall x.(a(x) -> b(x))")


def and_introduction(premises: list[Formula]) -> list[Formula]:
    if len(premises) != 2:
        raise PremiseShapeMismatch("And-Introduction takes two premises")
    return [And(premises[0], premises[1])]


def and_elimination(premises: list[Formula]) -> list[Formula]:
    if len(premises) != 1:
        raise PremiseShapeMismatch("And-Elimination takes one premise")
    f = premises[0]
    if isinstance(f, And):
        return [f.left, f.right]
    key = identity_key(f)
    # core form of a conjunction: ~(P -> ~Q)
    if (isinstance(key, Not) and isinstance(key.body, Imp)
            and isinstance(key.body.right, Not)):
        return [key.body.left, key.body.right.body]
    raise PremiseShapeMismatch("premise is not a conjunction")


def conflict_detection(premises: list[Formula]) -> list[Formula]:
    """From forall x.~(P & Q), P(a/x), Q(a/x) infer falsum."""
    if len(premises) != 3:
        raise PremiseShapeMismatch("Conflict Detection takes three premises")
    axiom, p_ground, q_ground = premises
    if (not isinstance(axiom, Forall) or not isinstance(axiom.body, Not)
            or not isinstance(axiom.body.body, And)):
        raise PremiseShapeMismatch("first premise must be forall x.~(P & Q)")
    x = axiom.var.name
    p, q = axiom.body.body.left, axiom.body.body.right
    if free_variables(p) != {x} or free_variables(q) != {x}:
        raise PremiseShapeMismatch("each conjunct must have exactly the quantified variable free")
    a = match_witness(p, p_ground, x)
    b = match_witness(q, q_ground, x)
    if a != b:
        raise UnificationFailure(f"witnesses differ: {a!r} vs {b!r}")
    return [Bottom()]


def contradiction_detection(premises: list[Formula]) -> list[Formula]:
    """From P and ~P (either order) infer falsum."""
    if len(premises) != 2:
        raise PremiseShapeMismatch("Contradiction Detection takes two premises")
    p, q = premises
    if identical(Not(p), q) or identical(p, Not(q)):
        return [Bottom()]
    raise PremiseShapeMismatch("premises are not a contradictory pair")


DERIVED_RULES = {
    "HypotheticalSyllogism": hypothetical_syllogism,
    "AristotelianSyllogism": aristotelian_syllogism,
    "Subsumption": subsumption,
    "AndIntroduction": and_introduction,
    "AndElimination": and_elimination,
    "ConflictDetection": conflict_detection,
    "ContradictionDetection": contradiction_detection,
}

# short tags used when printing from-lists; both detection rules print as CD
RULE_TAGS = {
    "HypotheticalSyllogism": "HS",
    "AristotelianSyllogism": "AS",
    "Subsumption": "Sub",
    "AndIntroduction": "AndI",
    "AndElimination": "AndE",
    "ConflictDetection": "CD",
    "ContradictionDetection": "CD",
}


def apply_derived(rule: str, premises: list[Formula]) -> list[Formula]:
    try:
        fn = DERIVED_RULES[rule]
    except KeyError:
        raise PremiseShapeMismatch(f"unknown derived rule {rule}") from None
    return fn(premises)
