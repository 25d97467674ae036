"""Exception hierarchy shared across the package."""

from __future__ import annotations


class TotalForcingError(Exception):
    """Base class for every error raised by this package."""


class Graph6Error(TotalForcingError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GuardError(TotalForcingError, ValueError):
    """An exhaustive operation was asked to run on a graph above the size guard."""


class InfeasibleError(TotalForcingError):
    """No vertex set satisfies the requested predicate (e.g. total forcing with an isolate)."""


class PreconditionError(TotalForcingError, ValueError):
    """Input violates the documented precondition of a construction."""


class ConstructionError(TotalForcingError):
    """A construction produced a set that failed verification.

    ``decomposition`` carries the partial packing decomposition (if any) and
    ``case_log`` the attempted cases, so a failed run can be diagnosed.
    """

    def __init__(self, message: str, decomposition=None, case_log=()):
        super().__init__(message)
        self.decomposition = decomposition
        self.case_log = list(case_log)


class ProjectionError(TotalForcingError):
    """Projecting a gadget TF-set back to the base graph did not give a forcing set."""

    def __init__(self, message: str, chronology=None):
        super().__init__(message)
        self.chronology = chronology
