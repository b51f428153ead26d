"""Exception types shared across the package.

Two failure modes are kept strictly apart: bad input (the caller violated a
documented precondition) and broken mathematics (an identity that must
always hold failed to hold, i.e. a bug).  The CLI maps them to exit codes 2
and 3 respectively.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """A documented precondition was violated by the caller."""


class InvariantError(RuntimeError):
    """An internal mathematical invariant failed; this is a bug, not bad input.

    The message carries a minimal reproducer (operation name and arguments).
    """

    def __init__(self, message: str, reproducer: dict | None = None):
        super().__init__(message)
        self.reproducer = reproducer or {}
