"""Exception types raised by the library."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graph input."""


class GraphFormatError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(GraphError):
    def __init__(self, vertex: int, line: int | None = None) -> None:
        self.vertex = vertex
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}self-loop on vertex {vertex} is not allowed")


class PreconditionError(ValueError):
    """An operation was called on input outside its documented domain."""


class NotStronglyConnectedError(PreconditionError):
    pass


class SizeGuardError(ValueError):
    """A brute-force routine refused an input that is too large to enumerate."""


class InternalError(RuntimeError):
    """A structural guarantee of the algorithms did not hold; indicates a library bug."""
