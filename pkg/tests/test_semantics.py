"""Finite-model evaluation, model search, and the tautology table."""
import pytest

from pathlogic.errors import BoundTooLarge
from pathlogic.semantics import (
    DOMAIN_CAP,
    Interpretation,
    enumerate_interpretations,
    find_model,
    is_model,
    is_tautology,
    valid_in,
)
from pathlogic.syntax import (
    And,
    Atom,
    Bottom,
    Const,
    Forall,
    Imp,
    Not,
    Var,
)

x = Var("x")
a, b = Const("a"), Const("b")
Pa, Qa = Atom("P", (a,)), Atom("Q", (a,))
Px, Qx = Atom("P", (x,)), Atom("Q", (x,))


def test_find_model_simple():
    axiom = Forall(x, Imp(Px, Qx))
    m = find_model([axiom, Pa], 2)
    assert m is not None
    assert is_model(m, [axiom, Pa, Qa])


def test_find_model_unsat():
    assert find_model([Pa, Not(Pa)], 2) is None
    assert find_model([Bottom()], 2) is None
    axiom = Forall(x, Not(And(Px, Qx)))
    assert find_model([axiom, Pa, Qa], 3) is None


def test_find_model_is_occurrence_blind():
    p1 = Atom("CF", (a,), sort="p", occ=1)
    p2 = Atom("CF", (a,), sort="p", occ=2)
    assert find_model([p1, Not(p2)], 2) is None
    assert find_model([p1, p2], 2) is not None


def test_domain_cap():
    with pytest.raises(BoundTooLarge):
        find_model([Pa], DOMAIN_CAP + 1)


def test_enumerate_interpretations_counts():
    # |D|=1: 1 constant map x 2 extensions; |D|=2: 2 maps x 4 extensions
    interps = list(enumerate_interpretations(["a"], {("P", None): 1}, 2))
    assert len(interps) == 2 + 8


def test_valid_in_quantifies_free_variables():
    interp = Interpretation((0, 1), {"a": 0}, {("P", None): frozenset({(0,), (1,)})},
                            {("P", None): 1})
    assert valid_in(interp, Px)
    interp2 = Interpretation((0, 1), {"a": 0}, {("P", None): frozenset({(0,)})},
                             {("P", None): 1})
    assert not valid_in(interp2, Px)
    assert valid_in(interp2, Pa)


def test_is_tautology_schema_instances():
    assert is_tautology(Imp(Pa, Imp(Qa, Pa)))
    assert is_tautology(Imp(Imp(Not(Pa), Not(Qa)), Imp(Qa, Pa)))
    assert not is_tautology(Imp(Pa, Qa))
    assert not is_tautology(Pa)


def test_is_tautology_treats_quantified_subformulas_as_letters():
    f = Forall(x, Px)
    assert is_tautology(Imp(f, f))
    assert not is_tautology(Imp(f, Forall(x, Qx)))
