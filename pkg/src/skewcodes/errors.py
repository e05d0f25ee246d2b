"""Exception hierarchy.

Every error carries a short stable ``code`` string so that the command line
front end can print a machine-parsable line.
"""

from __future__ import annotations


class SkewCodesError(Exception):
    code = "E_GENERIC"


class FieldError(SkewCodesError):
    """Bad field parameters (non-prime characteristic, size bound, ...)."""

    code = "E_FIELD"


class MismatchError(SkewCodesError):
    """Operands live in different fields, rings or twisting contexts."""

    code = "E_MISMATCH"


class ZeroDivision(SkewCodesError, ZeroDivisionError):
    code = "E_ZERO_DIVISION"


class NotAUnitError(SkewCodesError):
    """A ring element that must be invertible is a zero divisor."""

    code = "E_NOT_UNIT"


class DivisibilityError(SkewCodesError):
    """A polynomial that must right-divide ``x^n - lambda`` does not.

    The nonzero remainder is kept on the exception.
    """

    code = "E_NOT_DIVISOR"

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class GuardExceeded(SkewCodesError):
    """An exhaustive enumeration would exceed its configured bound."""

    code = "E_GUARD"


class ParseError(SkewCodesError, ValueError):
    code = "E_PARSE"


class DomainError(SkewCodesError, ValueError):
    """Arguments outside an operation's domain (odd length, wrong shape, ...)."""

    code = "E_DOMAIN"


class NotCovered(SkewCodesError):
    """The existence criteria only cover odd characteristic."""

    code = "E_NOT_COVERED"


class ConsistencyAlarm(SkewCodesError):
    """A computed object contradicts a structural theorem."""

    code = "E_CONSISTENCY"
