"""Series expansion, coefficient, bracket and reversion tools."""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from series.errors import BracketSeriesError
from series.expression import eval_bracket, eval_lseries, parse
from series.inversion import revert
from series.laurent import LSeries, coefficient_at, format_series, series_to_payload
from tools.responses import error_response
from utils.settings import get_default_order


def _rational(value: Fraction) -> List[int]:
    return [value.numerator, value.denominator]


def _series_response(expression: str, series: LSeries) -> Dict[str, Any]:
    return {
        "expression": expression,
        "text": format_series(series),
        "series": series_to_payload(series).model_dump(mode="json"),
    }


def expand_series_impl(expression: str, order: Optional[int] = None) -> Dict[str, Any]:
    """Implementation for expanding an expression as a truncated L-series."""
    order = get_default_order() if order is None else order
    try:
        return _series_response(expression, eval_lseries(parse(expression), order))
    except BracketSeriesError as e:
        return error_response(e)


def series_coefficient_impl(
    expression: str,
    n: int,
    order: Optional[int] = None
) -> Dict[str, Any]:
    """Implementation for [z^n] of an expression; the order is raised to n when needed."""
    order = max(get_default_order() if order is None else order, n)
    try:
        series = eval_lseries(parse(expression), order)
        value = coefficient_at(series, n)
    except BracketSeriesError as e:
        return error_response(e)
    return {
        "expression": expression,
        "n": n,
        "coefficient": _rational(value),
        "text": str(value),
    }


def evaluate_bracket_impl(
    f_expression: str,
    g_expression: str,
    order: Optional[int] = None
) -> Dict[str, Any]:
    """Implementation for [F(z)] G(z) with F read in powers of 1/z."""
    order = get_default_order() if order is None else order
    try:
        value = eval_bracket(f_expression, g_expression, order)
    except BracketSeriesError as e:
        return error_response(e)
    return {
        "f": f_expression,
        "g": g_expression,
        "value": _rational(value),
        "text": str(value),
    }


def revert_series_impl(expression: str, order: Optional[int] = None) -> Dict[str, Any]:
    """Implementation for the compositional inverse of a series with valuation 1."""
    order = get_default_order() if order is None else order
    try:
        f = eval_lseries(parse(expression), order)
        return _series_response(expression, revert(f, order))
    except BracketSeriesError as e:
        return error_response(e)
