"""Error dictionaries returned by the tool implementations."""

import logging
from typing import Any, Dict

from series.errors import BracketSeriesError, ParseError

logger = logging.getLogger(__name__)

_HELP = {
    "ParseError": "Check the expression against bracket://reference/grammar; negative powers are written z^(-1)",
    "UnsafeBracket": "Write denominator sums with the highest power first, e.g. z^2/(z-1) instead of -z^2/(1-z)",
    "InsufficientPrecision": "Raise the order, or BRACKET_MAX_PRECISION_RETRIES for deeply nested quotients",
    "CompositionValuationError": "exp, log and reversion need an argument without a constant term or with valuation 1",
    "DivisionByZeroSeries": "The divisor expands to zero within the requested order",
    "DivisionByZero": "A rational divisor is zero",
    "VariableMismatch": "Use a single variable, z or w, throughout one expression",
    "PoleInAnnulus": "Pick radii so that no pole lies strictly between them",
    "InvalidAnnulus": "The inner radius must be nonnegative and below the outer radius",
    "IntegralDivergent": "Every exponential rate must be below 1",
    "InvalidArgument": "Check the argument ranges in bracket://guide/usage",
}


def error_response(exc: BracketSeriesError) -> Dict[str, Any]:
    """Map an engine error to the {"error", "message", "help"} shape."""
    name = type(exc).__name__
    logger.info("%s: %s", name, exc)
    response: Dict[str, Any] = {
        "error": name,
        "message": str(exc),
        "help": _HELP.get(name, "See bracket://guide/usage"),
    }
    if isinstance(exc, ParseError):
        response["position"] = exc.position
        response["expected"] = list(exc.expected)
    return response


def is_error(response: Dict[str, Any]) -> bool:
    return "error" in response
