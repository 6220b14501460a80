"""Exception hierarchy shared by every twistforge module."""


class TwistforgeError(Exception):
    """Base class for library errors."""


class ZeroDenominatorError(TwistforgeError, ZeroDivisionError):
    """A denominator is identically the zero polynomial."""


class PoleError(TwistforgeError, ZeroDivisionError):
    """A nonzero denominator vanishes at a specialization point."""


class DegeneracyError(TwistforgeError, ValueError):
    """A nondegeneracy factor vanishes at a specialization point."""


class InvalidParameterError(TwistforgeError, ValueError):
    """Parameters violate an operation's preconditions."""


class BadReductionError(InvalidParameterError):
    """The prime is not a prime of good reduction for the curve."""


class FieldTooLargeError(TwistforgeError, ValueError):
    """A finite field exceeds the enumeration limit and no closed form applies."""


class AnomalyError(TwistforgeError):
    """Computed data contradicts an expected theoretical pattern."""


class ParseError(TwistforgeError, ValueError):
    """Syntax error in a polynomial or curve specification."""

    def __init__(self, message: str, text: str = "", position: int = -1):
        self.text = text
        self.position = position
        if position >= 0:
            message = f"{message} at position {position}"
        super().__init__(message)


class SemanticError(TwistforgeError, ValueError):
    """Parsed input violates a named rule (e.g. p must be an odd prime)."""

    def __init__(self, rule: str, message: str):
        self.rule = rule
        super().__init__(f"{message} [{rule}]")
