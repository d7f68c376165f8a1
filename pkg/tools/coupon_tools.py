"""Coupon-collector expectation tool."""

from typing import Any, Dict

from series.coupon import CouponProblem, solve_coupon
from series.errors import BracketSeriesError
from tools.responses import error_response


def coupon_expectation_impl(probabilities: str, n: int, method: str = "all") -> Dict[str, Any]:
    """Implementation for the expected number of trials to see n distinct coupons."""
    try:
        report = solve_coupon(CouponProblem.parse(probabilities, n), method)
    except BracketSeriesError as e:
        return error_response(e)
    return report.model_dump(mode="json")
