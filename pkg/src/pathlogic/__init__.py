"""Dynamic reasoning sessions over labeled first-order belief sets.

The central objects: a ``BeliefSet`` of time-stamped labeled formulas, a
revision procedure that backtracks from contradictions to retractable
axioms, and two controllers that keep a classification graph synchronized
with the beliefs (``DmaController`` for document taxonomies,
``MisController`` for multiple inheritance with exceptions).  ``Session``
wraps one controller with the pending-choice workflow, persistence, and the
wire serialization the CLI and HTTP service share.
"""
from .beliefs import BeliefSet, Derived, ExternalSource
from .dma import DmaController
from .errors import PathLogicError
from .events import EventReport
from .mis import MisController
from .revision import ChoiceRequest, RevisionCase
from .session import Session, import_file
from .text import parse, render

__version__ = "0.1.0"

__all__ = [
    "BeliefSet",
    "ChoiceRequest",
    "Derived",
    "DmaController",
    "EventReport",
    "ExternalSource",
    "MisController",
    "PathLogicError",
    "RevisionCase",
    "Session",
    "__version__",
    "import_file",
    "parse",
    "render",
]
