"""Exception hierarchy shared by every stage of the pipeline."""
from __future__ import annotations


class FloerError(Exception):
    """Base class for all errors raised by :mod:`fibered_floer`."""


class ParseError(FloerError, ValueError):
    """A twist-word string does not follow the grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class GenusTooSmall(FloerError, ValueError):
    pass


class ZeroExponent(FloerError, ValueError):
    pass


class UnsupportedCurve(FloerError, ValueError):
    pass


class UnsupportedMappingClass(FloerError):
    """The word falls outside every case the method covers."""


class LevelOutOfRange(FloerError, ValueError):
    pass


class UnsupportedLevel(FloerError):
    pass


class SlotOutOfRange(FloerError, IndexError):
    pass


class UnsupportedCase(FloerError):
    pass


class NonIntegralEvaluation(FloerError, ArithmeticError):
    pass


class InconclusiveSandwich(FloerError):
    """Lower bound |chi| and upper bound (essential pairs) disagree."""


class NoCitedComparison(FloerError):
    pass


class EnumerationTooLarge(FloerError):
    pass
