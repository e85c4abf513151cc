"""Exception hierarchy."""

from __future__ import annotations


class EaqmdsError(Exception):
    """Base class for all errors raised by this package."""


# field
class NotPrime(EaqmdsError, ValueError):
    pass


class TableCapExceeded(EaqmdsError, ValueError):
    pass


class NoIrreducibleFound(EaqmdsError, RuntimeError):
    pass


class FieldDivisionByZero(EaqmdsError, ZeroDivisionError):
    pass


class FieldMismatch(EaqmdsError, TypeError):
    pass


class NotAQuadraticExtension(EaqmdsError, ValueError):
    pass


class ZeroInput(EaqmdsError, ValueError):
    pass


class NotInSubfield(EaqmdsError, ValueError):
    pass


# linear algebra and codes
class NoSolution(EaqmdsError, ArithmeticError):
    pass


class DimensionMismatch(EaqmdsError, ValueError):
    pass


class CapExceeded(EaqmdsError, RuntimeError):
    pass


class InvalidCode(EaqmdsError, ValueError):
    pass


# parameters and constructions
class RangeViolation(EaqmdsError, ValueError):
    pass


class HardConstraintViolation(EaqmdsError, ValueError):
    """A parameter tuple breaks a divisibility or range condition."""

    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class DOutOfRange(RangeViolation):
    pass


class KOutOfRange(RangeViolation):
    pass


class SearchExhausted(EaqmdsError, RuntimeError):
    pass


class DuplicateEvaluationPoint(InvalidCode):
    pass


class UnknownRow(EaqmdsError, KeyError):
    pass


class UnknownTable(EaqmdsError, KeyError):
    pass
