"""Exception hierarchy shared by all fillscope modules."""


class FillscopeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FillscopeError):
    """Malformed input text (JSON syntax, missing fields, bad literals)."""


class InvariantError(FillscopeError):
    """A validated object violates one of its structural invariants."""


class DimensionError(FillscopeError):
    """A dimension index is out of range or two objects disagree on dimension."""


class UnknownCellError(FillscopeError):
    """A chain or boundary column references a cell that does not exist."""

    def __init__(self, cell, dim):
        super().__init__(f"unknown cell {cell!r} in dimension {dim}")
        self.cell = cell
        self.dim = dim
