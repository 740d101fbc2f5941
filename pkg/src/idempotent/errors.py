"""Exception hierarchy shared by all modules."""


class SemiringError(Exception):
    """Base class for algebraic failures."""


class ClosureUndefined(SemiringError, ArithmeticError):
    """The power series x* = 1 + x + x^2 + ... has no sum for this element."""


class ClosureDiverges(SemiringError, ArithmeticError):
    """The matrix closure series diverges.

    ``cycle`` holds the node indices of an offending closed path when one
    could be located, otherwise ``None``.
    """

    def __init__(self, message, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class RootUndefined(SemiringError, ArithmeticError):
    pass


class CapabilityMissing(SemiringError):
    """The semiring lacks a property an algorithm depends on."""


class NoCycle(SemiringError):
    pass


class DimensionMismatch(SemiringError, ValueError):
    pass


class InvalidBounds(SemiringError, ValueError):
    pass


class StrongViolation(InvalidBounds):
    """Interval touches zero at the lower bound only; not in the strong extension."""


class NotAPath(SemiringError, ValueError):
    pass


class ParseError(ValueError):
    pass


class MaxIterationsExceeded(SemiringError):
    """Iteration did not stabilize; the partial trace is attached."""

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace
