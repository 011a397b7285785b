"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class QtHarmonicError(Exception):
    """Base class for all errors raised by qtharmonic."""


class GraphInputError(QtHarmonicError, ValueError):
    """A caller passed a malformed argument (bad vertex id, bad parameters)."""


class DomainError(QtHarmonicError, ValueError):
    """A quantity is undefined for the given input (e.g. diameter of a disconnected graph)."""


class CapacityError(QtHarmonicError, ValueError):
    """The request exceeds a configured size cap."""


class UnsupportedError(QtHarmonicError, NotImplementedError):
    """The operation has no implementation for this kind of input."""


class ParseError(QtHarmonicError, ValueError):
    """Malformed interchange text.

    ``offset`` is a byte offset for graph6 input, ``line`` a 1-based line
    number for edge-list input; either may be ``None``.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line
