"""Exception hierarchy shared by every lapcert module."""

from __future__ import annotations


class LapcertError(Exception):
    """Base class for all errors raised by lapcert."""


class GraphFormatError(LapcertError, ValueError):
    """Input text does not describe a valid simple graph.

    ``offset`` is a character offset for graph6 input and ``line`` a
    1-based line number for edge-list input; either may be None.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class MalformedCharacterError(GraphFormatError):
    pass


class TruncatedInputError(GraphFormatError):
    pass


class PaddingError(GraphFormatError):
    pass


class LoopError(GraphFormatError):
    pass


class MultiEdgeError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class UnsupportedSizeError(LapcertError, ValueError):
    pass


class FamilyParameterError(LapcertError, ValueError):
    pass


class DomainError(LapcertError, ValueError):
    """A function was called outside the domain where it is defined."""


class EigenSolverError(LapcertError, ArithmeticError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (off-diagonal residual {residual:.3e})")
        self.residual = residual
