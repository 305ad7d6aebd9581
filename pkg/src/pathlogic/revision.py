"""Dialectical belief revision.

A contradiction entry's from-list is chased backwards to the extralogical
axioms it depends on (the culprits).  Some nonempty subset of culprits is
chosen, interactively or automatically, and retraction forward-chains through
to-lists: an entry is disbelieved iff it is to-list-reachable from a chosen
seed.  By to/from duality the contradiction itself is always in that closure.

``run_dbr`` is a generator so an interactive choice can suspend the enclosing
controller cascade mid-flight: it yields a ChoiceRequest and resumes when the
session sends back the chosen indexes.  Graph cleanup for retracted link
formulas stays with the controllers; revision only flips statuses.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .beliefs import BEL, DISBEL, BeliefSet, Derived, ExternalSource
from .errors import (
    ChooserReturnedEmpty,
    ContradictionStillDerivable,
    InvalidChoice,
)
from .syntax import Formula


@dataclass(frozen=True)
class Culprit:
    index: int
    formula: Formula
    entrenchment: float


@dataclass(frozen=True)
class ChoiceRequest:
    contradiction_index: int
    culprits: tuple[Culprit, ...]


@dataclass
class RevisionCase:
    contradiction_index: int
    culprits: list[int]
    chosen: list[int] = field(default_factory=list)
    retracted: list[int] = field(default_factory=list)


def collect_culprits(bs: BeliefSet, index: int) -> list[int]:
    """Extralogical axioms in the from-list transitive closure, ascending."""
    bs.entry(index)
    out: set[int] = set()
    seen: set[int] = set()
    stack = [index]
    while stack:
        i = stack.pop()
        if i in seen:
            continue
        seen.add(i)
        origin = bs.entry(i).label.from_list
        if isinstance(origin, ExternalSource):
            out.add(i)
        elif isinstance(origin, Derived):
            stack.extend(origin.premises)
    return sorted(out)


def forward_retract(bs: BeliefSet, seeds) -> list[int]:
    """Disbelieve seeds and their to-list closure; returns flipped indexes."""
    closure: set[int] = set()
    stack = list(seeds)
    while stack:
        i = stack.pop()
        if i in closure:
            continue
        closure.add(i)
        stack.extend(bs.entry(i).label.to_list)
    flipped = sorted(closure)
    for i in flipped:
        bs.set_status(i, DISBEL)
    return flipped


def auto_choose(request: ChoiceRequest) -> list[int]:
    """Exactly one culprit: minimum entrenchment, tie-break lowest time stamp."""
    best = min(request.culprits, key=lambda c: (c.entrenchment, c.index))
    return [best.index]


def run_dbr(bs: BeliefSet, contradiction_index: int, auto: bool):
    """One revision round.  Yields a ChoiceRequest when auto is false.

    Generator protocol: the driver sends the chosen indexes back in; the
    return value is the completed RevisionCase.
    """
    culprits = collect_culprits(bs, contradiction_index)
    case = RevisionCase(contradiction_index, culprits)
    request = ChoiceRequest(
        contradiction_index,
        tuple(Culprit(i, bs.entry(i).formula, bs.entry(i).label.entrenchment)
              for i in culprits),
    )
    if auto:
        chosen = auto_choose(request)
    else:
        chosen = yield request
        if chosen is None or len(chosen) == 0:
            raise ChooserReturnedEmpty("a nonempty culprit subset is required")
        bad = [i for i in chosen if i not in culprits]
        if bad:
            raise InvalidChoice(f"not culprits: {bad}")
    case.chosen = sorted(set(chosen))
    case.retracted = forward_retract(bs, case.chosen)
    if bs.entry(contradiction_index).label.status == BEL:
        raise ContradictionStillDerivable(
            f"entry {contradiction_index} survived retraction of {case.chosen}")
    return case
