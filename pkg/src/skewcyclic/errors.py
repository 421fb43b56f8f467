"""Typed errors.  The CLI reports ``type(err).__name__`` verbatim."""
from __future__ import annotations


class SkewCyclicError(Exception):
    """Base class for every computational error raised by the package."""


class NotPrime(SkewCyclicError, ValueError):
    pass


class ReducibleModulus(SkewCyclicError, ValueError):
    pass


class DegreeMismatch(SkewCyclicError, ValueError):
    pass


class FieldTooLarge(SkewCyclicError, ValueError):
    pass


class DivisionByZero(SkewCyclicError, ZeroDivisionError):
    pass


class CharDividesN(SkewCyclicError, ValueError):
    pass


class DegreeOutOfRange(SkewCyclicError, ValueError):
    pass


class NotAUnit(SkewCyclicError, ValueError):
    pass


class NotAnAutomorphism(SkewCyclicError, ValueError):
    pass


class ContextMismatch(SkewCyclicError, ValueError):
    pass


class ZeroPolynomial(SkewCyclicError, ValueError):
    pass


class EmptyInput(SkewCyclicError, ValueError):
    pass


class NotReduced(SkewCyclicError, ValueError):
    pass


class NotFullRowRank(SkewCyclicError, ValueError):
    pass


class DimensionMismatch(SkewCyclicError, ValueError):
    pass


class LengthMismatch(SkewCyclicError, ValueError):
    pass


class NotPrincipal(SkewCyclicError):
    pass


class NotDelayFree(SkewCyclicError):
    pass


class NotACode(SkewCyclicError):
    pass


class InternalNotPrincipal(SkewCyclicError):
    pass


class StateSpaceTooLarge(SkewCyclicError):
    pass


class InvalidParameters(SkewCyclicError, ValueError):
    pass


class ParseError(SkewCyclicError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UsageError(SkewCyclicError):
    pass
