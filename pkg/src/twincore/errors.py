"""Exceptions shared across the package."""


class GuardError(RuntimeError):
    """An enumeration was asked to exceed its explicit size guard.

    Guards are parameters with conservative defaults; exceeding one is an
    error rather than a silent truncation.
    """


class Int64OverflowError(OverflowError):
    """An exact integer computation left the signed 64-bit range."""
