"""Error hierarchy for the bracket-series engine."""

from typing import Iterable, Tuple


class BracketSeriesError(Exception):
    """Base class for every domain error raised by the engine."""


class DivisionByZero(BracketSeriesError, ZeroDivisionError):
    """Division of a rational by zero."""


class InvalidArgument(BracketSeriesError, ValueError):
    """An argument violates an operation's precondition."""


class VariableMismatch(BracketSeriesError, ValueError):
    """Operands are series in different variables."""


class DivisionByZeroSeries(BracketSeriesError, ZeroDivisionError):
    """Division by a series whose known window is empty."""


class InsufficientPrecision(BracketSeriesError):
    """A requested coefficient lies outside the known window."""


class CompositionValuationError(BracketSeriesError, ValueError):
    """Substitution, reversion, exp or log called outside its valuation rules."""


class IntegralDivergent(BracketSeriesError):
    """An exponential rate makes the integral against e^(-t) diverge."""


class PoleInAnnulus(BracketSeriesError, ValueError):
    """A pole lies strictly inside the requested annulus."""


class InvalidAnnulus(BracketSeriesError, ValueError):
    """Annulus bounds do not satisfy inner < outer."""


class UnsafeBracket(BracketSeriesError):
    """A bracket argument has no safe R-series reading."""


class ParseError(BracketSeriesError, ValueError):
    """Expression text does not match the grammar."""

    def __init__(self, message: str, position: int, expected: Iterable[str] = ()):
        self.position = position
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")
