class AsDescentError(Exception):
    """
    Base class of every error raised by the asdescent package.

    Each concrete error also derives from the closest builtin exception, so
    callers may catch either ``AsDescentError`` or e.g. ``ValueError``.
    """


class DivisionByZero(AsDescentError, ZeroDivisionError):
    pass


class FieldMismatch(AsDescentError, ValueError):
    pass


class ZeroInput(AsDescentError, ValueError):
    pass


class UnsupportedFieldSize(AsDescentError, ValueError):
    pass


class ReducibleModulus(AsDescentError, ValueError):
    pass


class IrreduciblePolynomialNotFound(AsDescentError, RuntimeError):
    pass


class PrecisionNotPositiveOverValuation(AsDescentError, ValueError):
    pass


class UnsupportedPlaceDegree(AsDescentError, ValueError):
    pass


class NoResidueRoot(AsDescentError, ArithmeticError):
    """
    A root needed in the residue field does not exist over the current
    constants. Retrying after ``extend_constants`` usually helps.
    """


class NotAUnit(AsDescentError, ValueError):
    pass


class PNotCoprime(AsDescentError, ValueError):
    pass


class NotNegativePrimeToP(AsDescentError, ValueError):
    pass


class TrivialLayer(AsDescentError, ValueError):
    pass


class UnreducedInput(AsDescentError, ValueError):
    pass


class SearchSpaceTooLarge(AsDescentError, ValueError):
    pass


class KillingFailed(AsDescentError, RuntimeError):
    pass


class ParseError(AsDescentError, ValueError):
    """
    Raised by the text syntax parser.

    Attributes
    ----------
    position : int
        Zero-based character offset in the input where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
