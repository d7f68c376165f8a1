"""Exact coefficient rings: rationals and exponential polynomials.

Rationals are ``fractions.Fraction`` values, which already keep a positive
denominator and a reduced numerator. ``ExpPoly`` is the finite sum
``sum(a * e^(b*t))`` used by the coupon-collector integrand.
"""

import math
import operator
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from series.errors import DivisionByZero, IntegralDivergent, InvalidArgument

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_OPERATIONS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: every coefficient in the engine is exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidArgument(f"expected an exact rational, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidArgument(f"not a rational literal: {value!r}") from e
    raise InvalidArgument(f"expected an exact rational, got {type(value).__name__}")


def rational_arithmetic(a: Fraction, b: Fraction, op: str) -> Fraction:
    """
    Exact field arithmetic on two rationals.

    Args:
        a: Left operand
        b: Right operand (ignored for "neg")
        op: One of "add", "sub", "mul", "div", "neg"

    Returns:
        The canonical result
    """
    if op == "neg":
        return -a
    if op not in _OPERATIONS:
        raise InvalidArgument(f"unknown rational operation {op!r}")
    if op == "div" and b == 0:
        raise DivisionByZero(f"cannot divide {a} by zero")
    return _OPERATIONS[op](Fraction(a), Fraction(b))


def binomial(n: int, k: int) -> Fraction:
    """
    Binomial coefficient with the polynomial extension to negative n.

    C(n, k) = n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0. For n >= 0
    this vanishes when k > n.
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(math.comb(n, k))
    numerator = 1
    for i in range(k):
        numerator *= n - i
    return Fraction(numerator, math.factorial(k))


class ExpPoly:
    """
    Finite sum of terms a*e^(b*t) with rational amplitude a and rate b.

    Instances are immutable; zero amplitudes are dropped and equal rates
    are merged on construction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Fraction, Fraction], Iterable[Tuple[Fraction, Fraction]]] = ()):
        merged: Dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for rate, amplitude in items:
            rate = to_rational(rate)
            merged[rate] = merged.get(rate, Fraction(0)) + to_rational(amplitude)
        self._terms: Tuple[Tuple[Fraction, Fraction], ...] = tuple(
            sorted((r, a) for r, a in merged.items() if a != 0)
        )

    @classmethod
    def constant(cls, value: RationalLike) -> "ExpPoly":
        return cls({Fraction(0): to_rational(value)})

    @classmethod
    def exponential(cls, rate: RationalLike, amplitude: RationalLike = 1) -> "ExpPoly":
        return cls({to_rational(rate): to_rational(amplitude)})

    @property
    def terms(self) -> Dict[Fraction, Fraction]:
        """Rate -> amplitude mapping (a fresh dict)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[Tuple[Fraction, Fraction]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExpPoly.constant(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        other = _as_exppoly(other)
        return ExpPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "ExpPoly":
        return ExpPoly((r, -a) for r, a in self._terms)

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-_as_exppoly(other))

    def __rsub__(self, other: "ExpPoly") -> "ExpPoly":
        return _as_exppoly(other) - self

    def __mul__(self, other: Union["ExpPoly", int, Fraction]) -> "ExpPoly":
        if isinstance(other, (int, Fraction)):
            return ExpPoly((r, a * other) for r, a in self._terms)
        return exppoly_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "ExpPoly(0)"
        parts = []
        for rate, amplitude in self._terms:
            parts.append(f"{amplitude}" if rate == 0 else f"{amplitude}*e^({rate}t)")
        return "ExpPoly(" + " + ".join(parts) + ")"


def _as_exppoly(value: Union[ExpPoly, int, Fraction]) -> ExpPoly:
    if isinstance(value, ExpPoly):
        return value
    return ExpPoly.constant(value)


def exppoly_mul(p: ExpPoly, q: ExpPoly) -> ExpPoly:
    """Product of exponential polynomials: rates add, amplitudes multiply."""
    return ExpPoly(
        (rp + rq, ap * aq)
        for rp, ap in p
        for rq, aq in q
    )


def exppoly_integrate_against_decay(p: ExpPoly) -> Fraction:
    """
    Exact value of the integral of p(t)*e^(-t) over [0, infinity).

    Each term a*e^(bt) contributes a/(1-b).

    Raises:
        IntegralDivergent: when some rate b >= 1
    """
    total = Fraction(0)
    for rate, amplitude in p:
        if rate >= 1:
            raise IntegralDivergent(f"term with rate {rate} does not decay against e^(-t)")
        total += amplitude / (1 - rate)
    return total
