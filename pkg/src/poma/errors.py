"""Exception types shared across the package."""


class PomaError(Exception):
    """Base class for every error raised by this library."""


class StructuralError(PomaError):
    """Malformed input: non-square order matrix, out-of-range table entry,
    or an operation that needs lattice structure the carrier lacks."""


class BudgetError(PomaError):
    """A configured search or size budget ran out before completion."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class PreconditionError(PomaError):
    """An operation was applied outside its stated domain."""


class ParseError(PomaError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ConsistencyError(PomaError):
    """Two independent decision routes that must agree disagreed."""
