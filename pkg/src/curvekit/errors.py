"""Shared error types for resource limits and partial data."""


class ResourceLimitError(RuntimeError):
    """An operation exceeded its configured size or memory budget."""


class InsufficientDataError(RuntimeError):
    """A classification was requested for a curve with no supporting data."""


class EscapesUniverseError(RuntimeError):
    """A map sends some universe curves outside the enumerated bound.

    Carries the offending source ids in ``escapees``.
    """

    def __init__(self, message, escapees):
        super().__init__(message)
        self.escapees = tuple(escapees)
