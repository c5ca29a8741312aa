"""Exception types shared across the package."""

from __future__ import annotations


class ChompError(Exception):
    """Base class for all errors raised by this package."""


class FaceNotPresent(ChompError):
    """A move named a face that is not in the current state."""


class TooLarge(ChompError):
    """A complex would exceed the configured face cap."""


class ResourceExceeded(ChompError):
    """The node budget or transposition-table capacity ran out.

    Signals that the instance is beyond desk scale, not that anything
    is wrong with the position.
    """

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class InvalidSpec(ChompError):
    """A family spec string or parameter record is malformed."""


class UnsupportedPrime(ChompError):
    """binom_mod only handles the primes 2 and 3."""


class NotValidated(ChompError):
    """An involution was used before (or despite failing) validation."""


class NotApplicable(ChompError):
    """A reduction's applicability condition does not hold."""


class DisciplineBroken(ChompError):
    """A mirror strategy was handed a state it cannot have produced."""
