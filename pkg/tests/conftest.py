"""Shared fixtures and replay helpers."""
from __future__ import annotations

import pytest

from pathlogic.beliefs import ExternalSource
from pathlogic.dma import DmaController
from pathlogic.events import EventReport
from pathlogic.kernel import RULE_TAGS
from pathlogic.mis import MisController
from pathlogic.text import parse


def drive(gen, choices=None):
    """Run a controller generator, answering choice requests from the list."""
    choices = list(choices or [])
    try:
        next(gen)
        while True:
            gen.send(choices.pop(0))
    except StopIteration:
        pass


def feed(ctrl, text, mode, choices=None) -> EventReport:
    rep = EventReport()
    drive(ctrl.input(parse(text, mode), rep), choices)
    return rep


def from_text(entry) -> str:
    """'hu' or '{AS, 9, 1}' style rendering of a from-list."""
    fl = entry.label.from_list
    if isinstance(fl, ExternalSource):
        return "hu"
    return "{%s, %s}" % (RULE_TAGS[fl.rule],
                         ", ".join(str(p) for p in fl.premises))


DMA_SCRIPT = [
    "forall x.(Science(x) -> TopLevel(x))",                        # 1
    "forall x.(Engineering(x) -> TopLevel(x))",                    # 2
    "forall x.(Humanities(x) -> TopLevel(x))",                     # 3
    "forall x.(ComputerScience(x) -> Science(x))",                 # 4
    "forall x.(ComputerScience(x) -> Engineering(x))",             # 5
    "forall x.(Philosophy(x) -> Humanities(x))",                   # 6
    "forall x.(ArtificialIntelligence(x) -> ComputerScience(x))",  # 7
    "forall x.~(Engineering(x) & Humanities(x))",                  # 8
    "Science(Doc1)",                                               # 9 -> 10
    "Engineering(Doc1)",                                           # 11
    "ArtificialIntelligence(Doc2)",                                # 12 -> 13..16
    "Philosophy(Doc3)",                                            # 17 -> 18, 19
]

NIXON_SCRIPT = [
    "forall x.(Q^k(x) -> P^p(x))",   # 1
    "forall x.(R^k(x) -> ~P^p(x))",  # 2
    "Q^k(Nixon)",                    # 3 -> 4
    "R^k(Nixon)",                    # 5 -> 6 -> falsum 7
]

BIRD_SCRIPT = [
    "forall x.(P^k(x) -> B^k(x))",    # 1
    "forall x.(B^k(x) -> CF^p(x))",   # 2
    "forall x.(P^k(x) -> ~CF^p(x))",  # 3
    "B^k(Tweety)",                    # 4 -> 5
    "P^k(Opus)",                      # 6 -> 7, (8 blocked), 9
]


def make_dma_base() -> DmaController:
    c = DmaController()
    for s in DMA_SCRIPT:
        feed(c, s, "plain")
    return c


def make_bird_base() -> MisController:
    c = MisController()
    for s in BIRD_SCRIPT:
        feed(c, s, "mis")
    return c


def make_nixon(choice):
    """Nixon controller run to completion, resolving the conflict with choice."""
    c = MisController()
    for s in NIXON_SCRIPT[:-1]:
        feed(c, s, "mis")
    rep = feed(c, NIXON_SCRIPT[-1], "mis", [[choice]])
    return c, rep


@pytest.fixture
def dma_base():
    return make_dma_base()


@pytest.fixture
def bird_base():
    return make_bird_base()


@pytest.fixture(scope="session")
def corpus_run():
    from corpus import run_corpus
    return run_corpus(1000)
