"""Shared exception types.

Domain errors map to CLI exit status 1, resource-cap errors to exit
status 2. InvariantViolation marks a failed internal cross-check and is
never raised for bad input.
"""


class DomainError(ValueError):
    """Invalid input: bad symbols, malformed parameters, unknown vertices."""


class ResourceCapError(RuntimeError):
    """A configured size or state-space cap would be exceeded."""


class InvariantViolation(RuntimeError):
    """Two redundant computations disagreed; indicates a bug, not bad input."""
