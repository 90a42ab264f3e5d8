"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LongCycleError(Exception):
    """Base class for all errors raised by longcycle."""


# -- malformed or invalid input (CLI exit status 2) --------------------------


class InputError(LongCycleError):
    """Input could not be turned into a valid embedded graph."""


class MalformedInput(InputError):
    pass


class AsymmetricAdjacency(InputError):
    pass


class EulerViolation(InputError):
    pass


class Disconnected(InputError):
    pass


class BadHeader(InputError):
    pass


class TruncatedRecord(InputError):
    pass


# -- domain failures (CLI exit status 1) --------------------------------------


class TooSmall(LongCycleError):
    pass


class NotThreeConnected(LongCycleError):
    pass


class NotEssentially4Connected(LongCycleError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class NotACycle(LongCycleError):
    pass


class NotExtendable(LongCycleError):
    pass


class EmptySide(LongCycleError):
    pass


class ExtendableEdgePresent(LongCycleError):
    pass


class ViolationsPresent(LongCycleError):
    pass


class Unmatched(LongCycleError):
    """No catalog recipe fits the queried face."""


class SearchExhausted(LongCycleError):
    pass


class UnknownName(LongCycleError):
    pass


class NotTriangulation(LongCycleError):
    pass


class PostCheckFailed(LongCycleError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class InternalError(LongCycleError):
    """An invariant that valid input guarantees was broken."""


class ContradictionReached(InternalError):
    """A catalog branch that cannot occur on valid input was reached."""


# -- resource limits (CLI exit status 3) --------------------------------------


class BudgetExceeded(LongCycleError):
    def __init__(self, message: str, explored: int = 0) -> None:
        super().__init__(message)
        self.explored = explored
