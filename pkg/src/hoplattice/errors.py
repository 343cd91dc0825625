"""Exception types raised across the package."""


class HopLatticeError(ValueError):
    """Base class for invalid-input errors."""


class NotPrime(HopLatticeError):
    pass


class SizeCapExceeded(HopLatticeError):
    pass


class IndexOutOfRange(HopLatticeError, IndexError):
    pass


class DivisionByZero(HopLatticeError, ZeroDivisionError):
    pass


class FieldMismatch(HopLatticeError):
    pass


class NotIrreducible(HopLatticeError):
    pass


class ZeroConstantTerm(HopLatticeError):
    pass


class NotPrimitive(HopLatticeError):
    pass


class DegreeMismatch(HopLatticeError):
    pass


class DegreeTooSmall(HopLatticeError):
    pass


class DimensionMismatch(HopLatticeError):
    pass


class BadDimensions(HopLatticeError):
    pass


class SamePair(HopLatticeError):
    pass
