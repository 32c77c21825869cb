"""Exception types shared across the engines."""

from __future__ import annotations


class SquarintError(Exception):
    """Base class for all squarint errors."""


class Divergent(SquarintError):
    """The requested integral does not converge for the given input."""


class BranchConflict(SquarintError):
    """A closed-form term would be evaluated on the principal-log branch cut."""


class IllConditioned(SquarintError):
    """Two distinct roots are too close to separate; re-canonicalize with a looser merge."""


class Nonconvergent(SquarintError):
    """An iterative evaluation stalled above the requested tolerance at its budget."""


class InvalidDim(SquarintError):
    """Dimension outside the supported range of the requested engine."""


class DomainError(SquarintError):
    """Argument outside the mathematical domain of a special function."""


class UnknownIdentity(SquarintError):
    """Identity id not present in the registry."""


class EngineFailure(SquarintError):
    """An engine failed while evaluating one side of an identity.

    Wraps the originating error and remembers which plan was being evaluated.
    """

    def __init__(self, message: str, plan=None, cause: Exception | None = None):
        super().__init__(message)
        self.plan = plan
        self.cause = cause


class ParseError(SquarintError):
    """Input text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
