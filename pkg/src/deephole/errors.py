"""Shared exception types."""


class BoundExceededError(ValueError):
    """An enumeration or table would exceed a configured size bound."""


class TheoremAssertionError(AssertionError):
    """A machine-checked structural expectation failed at the tested size."""
