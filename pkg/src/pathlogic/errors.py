"""Error taxonomy shared by the kernel, belief set, controllers, and services.

Every condition the engine can refuse carries a stable ``code`` string so the
CLI and HTTP layers can surface it without pattern-matching on messages.
"""
from __future__ import annotations


class PathLogicError(Exception):
    """Base class; ``code`` is the stable machine-readable identifier."""

    code = "Error"

    def __init__(self, message: str = "", **fields):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.fields = fields

    def to_dict(self) -> dict:
        d = {"code": self.code, "message": self.message}
        d.update(self.fields)
        return d


class NotSubstitutable(PathLogicError):
    code = "NotSubstitutable"


class ArityMismatch(PathLogicError):
    code = "ArityMismatch"


class VariableFreeInAntecedent(PathLogicError):
    code = "VariableFreeInAntecedent"


class PremiseShapeMismatch(PathLogicError):
    code = "PremiseShapeMismatch"


class UnificationFailure(PathLogicError):
    code = "UnificationFailure"


class DuplicateActive(PathLogicError):
    code = "DuplicateActive"

    def __init__(self, existing_index: int, message: str = ""):
        super().__init__(message or f"already active at index {existing_index}",
                         existingIndex=existing_index)
        self.existing_index = existing_index


class UnknownIndex(PathLogicError):
    code = "UnknownIndex"


class ChooserReturnedEmpty(PathLogicError):
    code = "ChooserReturnedEmpty"


class ContradictionStillDerivable(PathLogicError):
    code = "ContradictionStillDerivable"


class NotClosed(PathLogicError):
    code = "NotClosed"


class UnknownSymbol(PathLogicError):
    code = "UnknownSymbol"


class BoundTooLarge(PathLogicError):
    code = "BoundTooLarge"


class TooManyLetters(PathLogicError):
    code = "TooManyLetters"


class MalformedInput(PathLogicError):
    code = "MalformedInput"


class InputContradictsBeliefs(PathLogicError):
    code = "InputContradictsBeliefs"


class WouldCreateRedundantPath(PathLogicError):
    code = "WouldCreateRedundantPath"


class WouldCreateLoop(PathLogicError):
    code = "WouldCreateLoop"


class NotAnAxiom(PathLogicError):
    code = "NotAnAxiom"


class SessionBusy(PathLogicError):
    code = "SessionBusy"


class NotPending(PathLogicError):
    code = "NotPending"


class InvalidChoice(PathLogicError):
    code = "InvalidChoice"


class UnknownCategory(PathLogicError):
    code = "UnknownCategory"


class VersionMismatch(PathLogicError):
    code = "VersionMismatch"


class ReplayDivergence(PathLogicError):
    code = "ReplayDivergence"


class FormulaSyntaxError(PathLogicError):
    """Parse failure; ``span`` is the (start, end) character range at fault."""

    code = "SyntaxError"

    def __init__(self, message: str, span: tuple[int, int]):
        super().__init__(message, span=list(span))
        self.span = span


class TypeSuffixRequired(FormulaSyntaxError):
    code = "TypeSuffixRequired"
