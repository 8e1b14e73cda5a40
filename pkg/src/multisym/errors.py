"""Exception hierarchy shared by every module of the package."""


class MultisymError(ValueError):
    """Base class for all domain errors raised by multisym."""


class InvalidContext(MultisymError):
    pass


class InvalidLabel(MultisymError):
    pass


class IndexOutOfRange(MultisymError):
    pass


class ContextMismatch(MultisymError):
    pass


class NotDivisible(MultisymError):
    """Raised by exact division when a nonzero remainder term appears.

    ``term`` holds the offending ``(exponents, coefficient)`` pair.
    """

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term


class DivisionByZero(MultisymError, ZeroDivisionError):
    pass


class InvalidPermutation(MultisymError):
    pass


class NonSquareMatrix(MultisymError):
    pass


class ShapeMismatch(MultisymError):
    pass


class InvalidMultiPartition(MultisymError):
    """The chain inequality fails; ``position`` is the 1-based flat index
    of the first entry that is larger than its predecessor."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class LengthExceedsUniverse(MultisymError):
    pass


class BadExponents(MultisymError):
    pass


class UniverseTooLarge(MultisymError):
    pass


class BudgetExceeded(MultisymError):
    pass


class ChainShapeMismatch(MultisymError):
    pass
