"""Exception hierarchy shared by every module.

The CLI maps any :class:`YoungFlipError` to exit code 2 and prints the
class name, so the names below are part of the external interface.
"""


class YoungFlipError(Exception):
    """Base class for domain errors."""


class PreconditionError(YoungFlipError, ValueError):
    """An argument violates an operation's documented precondition."""


class NotInYn(PreconditionError):
    """A partition does not fit under the line y = x - n."""


class InvalidTriangulation(PreconditionError):
    pass


class DiagonalAbsent(PreconditionError):
    pass


class BudgetExceeded(YoungFlipError):
    """An enumeration would exceed its configured size budget."""


class NotDivisible(YoungFlipError, ArithmeticError):
    """Exact Laurent division has no Laurent quotient."""


class FrozenVertex(PreconditionError):
    """Mutation was requested at a frozen or out-of-range vertex."""


class NoUniqueReplacement(YoungFlipError):
    """A windowed arc flip cannot be localized inside the window."""


class UnknownFormat(PreconditionError):
    pass


class ParseError(PreconditionError):
    pass
