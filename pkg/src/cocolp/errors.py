"""Exception hierarchy. The CLI maps each class to a fixed exit code."""

from __future__ import annotations


class CocolpError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ParseError(CocolpError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OrderingError(CocolpError, ValueError):
    """An ordering does not match the vertex set it is used with."""


class PreconditionError(CocolpError):
    """An input violates an algorithm's precondition; carries the witness."""

    exit_code = 2

    def __init__(self, message: str, witness=None):
        self.witness = witness
        if witness is not None:
            message = f"{message}: {witness}"
        super().__init__(message)


class CapExceededError(CocolpError):
    """Refusal by a size-capped routine (oracles, DP size guard)."""

    exit_code = 2


class InternalConsistencyError(CocolpError, AssertionError):
    """A result failed a redundant self-check. Always a bug."""

    exit_code = 3
