"""Series reversion and Lagrange inversion."""

import logging
from fractions import Fraction

from series.bracket import constant_term
from series.errors import CompositionValuationError, InsufficientPrecision, InvalidArgument
from series.laurent import (
    LSeries,
    add,
    coefficient_at,
    compose,
    make_series,
    mul,
    power,
    theta,
)

logger = logging.getLogger(__name__)


def _require_reversible(f: LSeries) -> Fraction:
    if f.is_zero() or f.valuation != 1:
        raise CompositionValuationError(
            f"reversion needs valuation 1 and a nonzero linear term, got valuation {f.valuation}"
        )
    return f.coefficients[0]


def revert(f: LSeries, order: int) -> LSeries:
    """
    Compositional inverse g with f(g(z)) = g(f(z)) = z + O(z^(order+1)).

    Each g_n comes from one linear equation: with g truncated below n, the
    coefficient of z^n in f(g) is c_n + f_1 g_n, and it must vanish.

    Args:
        f: Series with valuation 1
        order: Truncation order of the inverse

    Raises:
        CompositionValuationError: when f_1 is missing
        InsufficientPrecision: when f is known below ``order``
    """
    lead = _require_reversible(f)
    if f.order < order:
        raise InsufficientPrecision(f"reversion to order {order} needs f to order {order}, got {f.order}")
    terms = {1: 1 / lead}
    for n in range(2, order + 1):
        partial = make_series(f.variable, terms, n)
        residual = coefficient_at(compose(f, partial), n)
        if residual:
            terms[n] = -residual / lead
    logger.debug("reverted series to order %d", order)
    return make_series(f.variable, terms, order)


def lagrange_coefficient(f: LSeries, m: int, n: int) -> Fraction:
    """
    (m/n) [z^-m] f(z)^-n, which equals [z^n] g(z)^m for the inverse g.

    Raises:
        InvalidArgument: when n = 0
        InsufficientPrecision: when f is too short to resolve [z^-m] f^-n
    """
    _require_reversible(f)
    if n == 0:
        raise InvalidArgument("Lagrange's formula needs n != 0")
    return Fraction(m, n) * coefficient_at(power(f, -n), -m)


def paule_expansion(f: LSeries, m: int, order: int) -> LSeries:
    """
    Sum over k of f^k [z^k] g^m, with g the inverse of f.

    The result is z^m up to the tracked precision.
    """
    _require_reversible(f)
    g_power = power(revert(f, order), m)
    total = LSeries.zero(f.variable, min(order, g_power.order))
    for k, c in g_power.terms().items():
        if k > order:
            break
        total = add(total, power(f, k) * c)
    return total


def theta_power_constant_term(f: LSeries, k: int, n: int) -> Fraction:
    """
    [1] f^(k-1-n) theta(f).

    Zero when k != n and one when k = n, for any f with f_1 != 0.
    """
    _require_reversible(f)
    return constant_term(mul(power(f, k - 1 - n), theta(f)))
