"""Exception hierarchy.

``MathError`` subclasses signal numerical or structural failures (CLI exit 1);
``ExprError`` subclasses signal malformed category expressions (CLI exit 2).
"""


class GaugeError(Exception):
    pass


class MathError(GaugeError):
    pass


class UnsupportedSeries(GaugeError, ValueError):
    pass


class ClosureOverflow(MathError):
    pass


class NumericalDegeneracy(MathError):
    pass


class NonIntegralMultiplicity(MathError):
    pass


class NegativeMultiplicity(MathError):
    pass


class NotModular(MathError):
    pass


class InconsistentRing(MathError):
    pass


class NoPositiveEigenvector(MathError):
    pass


class SearchBudgetExceeded(MathError):
    pass


class ExprError(GaugeError):
    """Malformed category expression; ``offset`` is a byte offset into the input."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (at byte {offset})")
        self.offset = offset


class ExprSyntaxError(ExprError):
    pass


class ArityError(ExprError):
    pass


class UnknownSeries(ExprError):
    pass
