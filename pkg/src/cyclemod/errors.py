"""Exception types shared across the package."""

from __future__ import annotations


class CycleModError(Exception):
    """Base class for all package-specific errors."""


class InvalidVertex(CycleModError):
    """A vertex id is outside the host graph's range 0..n-1."""


class LoopRejected(CycleModError):
    """An edge (v, v) was supplied; loops are not representable."""


class FormatError(CycleModError):
    """Malformed textual graph input.

    Carries ``offset``, the byte position at which parsing failed.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class VertexNotOnCycle(CycleModError):
    """A queried vertex does not lie on the oriented cycle."""


class OrderViolation(CycleModError):
    """Vertices were not supplied in orientation order along the cycle."""


class PreconditionFailed(CycleModError):
    """A lemma verifier was called on input violating its hypotheses.

    The message names the violated clause.
    """


class DisconnectedInput(CycleModError):
    """The operation requires a connected graph."""


class BudgetExceeded(CycleModError):
    """A bounded stream was truncated; truncation is never silent."""


class CeilingExceeded(CycleModError):
    """An exhaustive search was requested beyond the configured ceiling."""


class ConstructionInvalid(CycleModError):
    """A named construction failed its mandatory validation suite."""


class EmptyList(CycleModError):
    """A block chain needs at least one block."""
