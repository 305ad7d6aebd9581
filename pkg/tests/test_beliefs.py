"""Labels, the belief-set clock, duplicate tracking, and pattern search."""
import pytest

from pathlogic.beliefs import (
    A_POSTERIORI,
    A_PRIORI,
    BEL,
    DISBEL,
    SYNTHETIC,
    BeliefSet,
    Derived,
    DisjointnessOver,
    ExternalSource,
    GroundAtom,
    LOGICAL_AXIOM_ENTRENCHMENT,
    UniversalImplication,
)
from pathlogic.errors import DuplicateActive, UnknownIndex
from pathlogic.syntax import And, Atom, Const, Forall, Imp, Not, Var
from pathlogic.text import parse

x = Var("x")
a = Const("a")


def test_enter_labels_external_input():
    bs = BeliefSet()
    idx = bs.enter(Atom("P", (a,)), ExternalSource())
    e = bs.entry(idx)
    assert idx == 1 and bs.next_index == 2
    assert e.label.time_stamp == 1
    assert e.label.status == BEL and e.active
    assert e.label.entrenchment == 0.5
    assert e.label.category == A_POSTERIORI
    assert e.label.to_list == []
    assert isinstance(e.label.from_list, ExternalSource)


def test_enter_wires_to_lists_for_derived():
    bs = BeliefSet()
    i1 = bs.enter(Forall(x, Imp(Atom("P", (x,)), Atom("Q", (x,)))),
                  ExternalSource())
    i2 = bs.enter(Atom("P", (a,)), ExternalSource())
    i3 = bs.enter(Atom("Q", (a,)),
                  Derived("AristotelianSyllogism", (i2, i1)),
                  category=SYNTHETIC)
    assert bs.entry(i1).label.to_list == [i3]
    assert bs.entry(i2).label.to_list == [i3]
    assert bs.entry(i3).label.category == SYNTHETIC


def test_logical_axiom_label_values():
    bs = BeliefSet()
    idx = bs.enter(parse("P(a) -> (Q(a) -> P(a))", "plain"), ExternalSource(),
                   entrenchment=LOGICAL_AXIOM_ENTRENCHMENT, category=A_PRIORI)
    e = bs.entry(idx)
    assert e.label.entrenchment == 1.0
    assert e.label.category == A_PRIORI


def test_duplicate_blocks_on_logical_identity():
    bs = BeliefSet()
    bs.enter(Atom("CF", (a,), sort="p", occ=1), ExternalSource())
    # a different occurrence index is still the same formula
    assert bs.duplicate_of(Atom("CF", (a,), sort="p", occ=2)) == 1
    with pytest.raises(DuplicateActive):
        bs.enter(Atom("CF", (a,), sort="p", occ=2), ExternalSource())


def test_retraction_frees_the_identity_slot():
    bs = BeliefSet()
    i1 = bs.enter(Atom("P", (a,)), ExternalSource())
    bs.set_status(i1, DISBEL)
    assert not bs.entry(i1).active
    assert bs.duplicate_of(Atom("P", (a,))) is None
    i2 = bs.enter(Atom("P", (a,)), ExternalSource())
    assert i2 == 2
    # reviving the first copy would collide with the second
    with pytest.raises(DuplicateActive):
        bs.set_status(i1, BEL)


def test_skip_step_burns_an_index():
    bs = BeliefSet()
    assert bs.skip_step() == 1
    idx = bs.enter(Atom("P", (a,)), ExternalSource())
    assert idx == 2
    with pytest.raises(UnknownIndex):
        bs.entry(1)


def test_find_active_patterns():
    bs = BeliefSet()
    bs.enter(Atom("P", (a,)), ExternalSource())
    bs.enter(Not(Atom("Q", (a,))), ExternalSource())
    bs.enter(Forall(x, Imp(Atom("P", (x,)), Atom("Q", (x,)))), ExternalSource())
    bs.enter(Forall(x, Not(And(Atom("P", (x,)), Atom("R", (x,))))),
             ExternalSource())
    assert [i for i, _ in bs.find_active(GroundAtom(pred=(None, None)))] == [1]
    assert [i for i, _ in bs.find_active(
        GroundAtom(pred=(None, None), negated=True))] == [2]
    assert [i for i, _ in bs.find_active(
        GroundAtom(pred=("Q", None), negated=True, const="a"))] == [2]
    assert [i for i, _ in bs.find_active(
        UniversalImplication(antecedent=("P", None)))] == [3]
    assert [i for i, _ in bs.find_active(
        UniversalImplication(antecedent=("P", None),
                             consequent_negated=True))] == []
    assert [i for i, _ in bs.find_active(DisjointnessOver())] == [4]
    assert [i for i, _ in bs.find_active(
        DisjointnessOver(pair=("R", "P")))] == [4]
    assert bs.find_active(DisjointnessOver(pair=("P", "Q"))) == []


def test_find_active_is_sort_exact():
    bs = BeliefSet()
    bs.enter(Atom("B", (a,), sort="k"), ExternalSource())
    assert bs.find_active(GroundAtom(pred=(None, None))) == []
    assert [i for i, _ in bs.find_active(GroundAtom(pred=(None, "k")))] == [1]


def test_symbol_set_accumulates():
    bs = BeliefSet()
    bs.enter(Forall(x, Imp(Atom("P", (x,)), Atom("Q", (x,)))), ExternalSource())
    bs.enter(Atom("P", (a,)), ExternalSource())
    assert ("pred", "P", 1) in bs.symbol_set
    assert ("pred", "Q", 1) in bs.symbol_set
    assert ("const", "a") in bs.symbol_set


def test_theory_view_lists_active_externals_only():
    bs = BeliefSet()
    i1 = bs.enter(Atom("P", (a,)), ExternalSource())
    bs.enter(Atom("Q", (a,)), Derived("AristotelianSyllogism", (i1,)))
    _, axioms = bs.theory_view()
    assert [i for i, _ in axioms] == [i1]
