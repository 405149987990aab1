"""Exception types shared across the package."""

from __future__ import annotations


class SurfaceSyntaxError(ValueError):
    """Malformed surface or braid text; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class PreconditionError(ValueError):
    """An operation's precondition failed; ``witness`` names the offender."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalInvariantError(RuntimeError):
    """Two routes that must agree did not; indicates an implementation bug."""
