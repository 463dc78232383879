"""Exception types raised by the library."""


class QGrothError(Exception):
    """Base class for library errors."""


class NotDivisible(QGrothError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NotInLn(QGrothError, ValueError):
    """A polynomial has a monomial outside the staircase span L_n."""


class IterationGuard(QGrothError, RuntimeError):
    """An expansion loop exceeded its iteration bound.

    This normally means the input is not in the span of the target basis.
    """

    def __init__(self, message, partial=None, remainder=None):
        super().__init__(message)
        self.partial = partial
        self.remainder = remainder


class HypothesisViolation(QGrothError, ValueError):
    """Inputs fail the hypothesis of an identity being verified."""
