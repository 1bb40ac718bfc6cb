"""
Exception hierarchy shared by every ordtile subpackage.

Search exhaustion inside the tiling engine is a status value, never one of
these exceptions.
"""


class OrdtileError(Exception):
    """Base class of every error raised deliberately by ordtile."""


class InputError(OrdtileError, ValueError):
    """Malformed input, violated precondition or bad parameter."""


class UnsupportedInputError(InputError):
    """Well-formed input that the requested construction is not defined for."""


class ContradictionError(OrdtileError, RuntimeError):
    """A mathematical guarantee was observed to fail on concrete data."""


class InconclusiveError(OrdtileError, RuntimeError):
    """A search that has to reach a decision ran out of budget."""


class InternalInconsistencyError(OrdtileError, AssertionError):
    """Two independently derived results disagree."""
