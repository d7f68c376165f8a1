"""Annulus expansion tool for factored rational functions."""

from typing import Any, Dict

from series.annulus import (
    AnnulusSpec,
    FactoredRational,
    expand_in_annulus,
    parse_poles,
    parse_radius,
    window_report,
)
from series.errors import BracketSeriesError
from series.exact import to_rational
from series.expression import eval_laurent_polynomial, parse
from tools.responses import error_response


def expand_rational_impl(
    numerator: str,
    poles: str,
    shift: int = 0,
    inner: str = "0",
    outer: str = "inf",
    start: int = -4,
    stop: int = 4,
    scale: str = "1"
) -> Dict[str, Any]:
    """
    Implementation for the two-sided expansion of
    scale * z^shift * numerator / prod((z - r)^m) in inner < |z| < outer.
    """
    try:
        f = FactoredRational.build(
            numerator=eval_laurent_polynomial(parse(numerator)),
            poles=parse_poles(poles) if poles.strip() else [],
            shift=shift,
            scale=to_rational(scale),
        )
        annulus = AnnulusSpec(to_rational(inner), parse_radius(outer))
        report = window_report(expand_in_annulus(f, annulus), start, stop)
    except BracketSeriesError as e:
        return error_response(e)
    return report.model_dump(mode="json")
