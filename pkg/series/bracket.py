"""
The bracket operator [F(z)] G(z) = sum over n of f_n g_n.

F is read as an R-series and G as an L-series, so the sum runs over the
finite overlap valuation(G)..top(F). Both windows must cover that overlap;
an under-resolved input is an error, never a silent truncation.
"""

from fractions import Fraction
from typing import Mapping, TypeVar

from series.errors import InsufficientPrecision, InvalidArgument, VariableMismatch
from series.laurent import LSeries, RSeries

T = TypeVar("T")


def bracket(f: RSeries, g: LSeries) -> Fraction:
    """
    Evaluate [F(z)] G(z) exactly.

    Args:
        f: R-series inside the bracket
        g: L-series outside the bracket

    Returns:
        The finite sum of f_n g_n over valuation(g)..top(f)

    Raises:
        VariableMismatch: when the series use different variables
        InsufficientPrecision: when a window stops short of the overlap
    """
    if f.variable != g.variable:
        raise VariableMismatch(f"bracket of {f.variable!r} against {g.variable!r}")
    if f.low_order > g.valuation:
        raise InsufficientPrecision(
            f"bracket argument is known only down to {f.low_order}, "
            f"but the outer series starts at {g.valuation}"
        )
    if g.order < f.top:
        raise InsufficientPrecision(
            f"outer series is known only up to {g.order}, "
            f"but the bracket argument reaches {f.top}"
        )
    return sum(
        (f._get(n) * g._get(n) for n in range(g.valuation, f.top + 1)),
        Fraction(0),
    )


def extract_coefficient(n: int, g: LSeries) -> Fraction:
    """[z^n] G(z) as the bracket of the monomial z^n."""
    if n > g.order:
        raise InsufficientPrecision(f"[{g.variable}^{n}] needs order {n}, series has {g.order}")
    monomial = RSeries.monomial(g.variable, n, low_order=min(n, g.valuation))
    return bracket(monomial, g)


def constant_term(g: LSeries) -> Fraction:
    """The [1] operator."""
    return extract_coefficient(0, g)


def leftward_series(n: int, low_order: int, variable: str = "z") -> RSeries:
    """
    The R-series z^(n-1) + z^(n-2) + ... known down to low_order.

    This is the expansion of z^n/(z-1) in powers of 1/z.
    """
    if low_order > n - 1:
        raise InvalidArgument(f"low order {low_order} exceeds the top exponent {n - 1}")
    width = n - low_order
    return RSeries(variable, n - 1, (Fraction(1),) * width, low_order)


def leftward_sum(coefficients: Mapping[int, T], n: int, zero: T) -> T:
    """
    Sum the coefficients at exponents below n.

    Works over any coefficient ring; the mapping must already hold every
    nonzero coefficient below n.
    """
    total = zero
    for exponent in sorted(coefficients):
        if exponent >= n:
            break
        total = total + coefficients[exponent]
    return total


def leftward_sum_bracket(n: int, g: LSeries) -> Fraction:
    """[z^n/(z-1)] G(z) = g_(n-1) + g_(n-2) + ... + g_valuation."""
    if g.order < n - 1:
        raise InsufficientPrecision(f"leftward sum below {n} needs order {n - 1}, series has {g.order}")
    return leftward_sum(g.terms(), n, Fraction(0))


def _shift(f: RSeries, k: int) -> RSeries:
    return RSeries(f.variable, f.top + k, f.coefficients, f.low_order + k)


def multiplication_law(f1: RSeries, f2: RSeries, g1: LSeries, g2: LSeries) -> Fraction:
    """
    Right side of the product rule for brackets.

    Evaluates sum over k of ([F1 z^k] G1)([F2 z^-k] G2). Only finitely many
    k contribute: [F1 z^k] G1 vanishes once top(F1) + k < valuation(G1),
    and [F2 z^-k] G2 once top(F2) - k < valuation(G2).
    """
    if f1.is_zero() or f2.is_zero() or g1.is_zero() or g2.is_zero():
        return Fraction(0)
    total = Fraction(0)
    for k in range(g1.valuation - f1.top, f2.top - g2.valuation + 1):
        left = bracket(_shift(f1, k), g1)
        if left == 0:
            continue
        total += left * bracket(_shift(f2, -k), g2)
    return total
