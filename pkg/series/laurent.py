"""
Truncated formal Laurent series.

An ``LSeries`` has finitely many negative exponents and is known exactly on
the window ``valuation..order``; everything above ``order`` is unknown, and
everything below ``valuation`` is zero. An ``RSeries`` is the mirror image:
finitely many positive exponents, known exactly on ``low_order..top``.

Every operation returns the largest window its inputs determine:

    add      order = min(N_a, N_b)
    mul      valuation v_a + v_b, order min(N_a + v_b, N_b + v_a)
    div      valuation v_a - v_b, order min(N_a - v_b, v_a + N_b - 2 v_b)
    power    order N + (m - 1) v for every integer m
    compose  order min((N_g + 1) v_f - 1, order of sum g_n f^n)

The all-zero window is representable: its valuation is ``order + 1``.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from series.errors import (
    CompositionValuationError,
    DivisionByZeroSeries,
    InsufficientPrecision,
    InvalidArgument,
    VariableMismatch,
)
from series.exact import RationalLike, to_rational

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _build(variable: str, start: int, coefficients: Sequence[Fraction], order: int) -> "LSeries":
    """Canonical LSeries from coefficients at exponents start, start+1, ..."""
    width = max(order - start + 1, 0)
    coeffs = [Fraction(c) for c in coefficients[:width]]
    coeffs.extend([Fraction(0)] * (width - len(coeffs)))
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k == len(coeffs):
        return LSeries(variable, order + 1, (), order)
    return LSeries(variable, start + k, tuple(coeffs[k:]), order)


@dataclass(frozen=True)
class LSeries:
    """Truncated L-series: exact on exponents valuation..order, O(z^(order+1)) beyond."""

    variable: str
    valuation: int
    coefficients: Tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if len(self.coefficients) != self.order - self.valuation + 1:
            raise InvalidArgument(
                f"window {self.valuation}..{self.order} does not match {len(self.coefficients)} coefficients"
            )
        if self.coefficients and self.coefficients[0] == 0:
            raise InvalidArgument("leading coefficient of a canonical series must be nonzero")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_terms(cls, variable: str, terms: Mapping[int, RationalLike], order: int) -> "LSeries":
        return make_series(variable, terms, order)

    @classmethod
    def zero(cls, variable: str, order: int) -> "LSeries":
        return cls(variable, order + 1, (), order)

    @classmethod
    def constant(cls, variable: str, value: RationalLike, order: int) -> "LSeries":
        return _build(variable, 0, [to_rational(value)], order)

    @classmethod
    def monomial(cls, variable: str, exponent: int, order: int, coefficient: RationalLike = 1) -> "LSeries":
        return _build(variable, exponent, [to_rational(coefficient)], order)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        """True when the known window holds no nonzero coefficient."""
        return not self.coefficients

    def _get(self, n: int) -> Fraction:
        if n < self.valuation:
            return Fraction(0)
        return self.coefficients[n - self.valuation]

    def __getitem__(self, n: int) -> Fraction:
        return coefficient_at(self, n)

    def terms(self) -> Dict[int, Fraction]:
        """Nonzero coefficients in the known window."""
        return {self.valuation + i: c for i, c in enumerate(self.coefficients) if c != 0}

    def truncate(self, order: int) -> "LSeries":
        if order > self.order:
            raise InsufficientPrecision(f"cannot extend order {self.order} to {order}")
        return _build(self.variable, self.valuation, self.coefficients, order)

    def mirror(self) -> "RSeries":
        """The R-series G(z^-), exponent n -> -n."""
        return RSeries(self.variable, -self.valuation, self.coefficients, -self.order)

    def agrees_with(self, other: "LSeries") -> bool:
        """Coefficientwise equality on the common known window."""
        if self.variable != other.variable:
            return False
        top = min(self.order, other.order)
        start = min(self.valuation, other.valuation)
        return all(self._get(n) == other._get(n) for n in range(start, top + 1))

    # ------------------------------------------------------------------
    # operators
    # ------------------------------------------------------------------

    def _lift(self, value: Union["LSeries", Scalar]) -> "LSeries":
        if isinstance(value, LSeries):
            return value
        if isinstance(value, (int, Fraction)):
            return LSeries.constant(self.variable, value, self.order)
        raise TypeError(f"cannot combine LSeries with {type(value).__name__}")

    def __add__(self, other):
        if not isinstance(other, (LSeries, int, Fraction)):
            return NotImplemented
        return add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self):
        return _build(self.variable, self.valuation, [-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        if not isinstance(other, (LSeries, int, Fraction)):
            return NotImplemented
        return add(self, -self._lift(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return add(self._lift(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _build(self.variable, self.valuation, [c * other for c in self.coefficients], self.order)
        if not isinstance(other, LSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroSeries("division of a series by the scalar 0")
            return self * (1 / Fraction(other))
        if not isinstance(other, LSeries):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return reciprocal(self) * other

    def __pow__(self, m: int):
        return power(self, m)

    def __str__(self) -> str:
        return format_series(self)


@dataclass(frozen=True)
class RSeries:
    """Truncated R-series: exact on exponents low_order..top, coefficients listed from top down."""

    variable: str
    top: int
    coefficients: Tuple[Fraction, ...]
    low_order: int

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if len(self.coefficients) != self.top - self.low_order + 1:
            raise InvalidArgument(
                f"window {self.low_order}..{self.top} does not match {len(self.coefficients)} coefficients"
            )
        if self.coefficients and self.coefficients[0] == 0:
            raise InvalidArgument("top coefficient of a canonical R-series must be nonzero")

    @classmethod
    def from_terms(cls, variable: str, terms: Mapping[int, RationalLike], low_order: int) -> "RSeries":
        """R-series with the given terms, known down to low_order."""
        if any(n < low_order for n in terms):
            raise InvalidArgument(f"exponent below low order {low_order}")
        return make_series(variable, {-n: c for n, c in terms.items()}, -low_order).mirror()

    @classmethod
    def monomial(cls, variable: str, exponent: int, low_order: int, coefficient: RationalLike = 1) -> "RSeries":
        return cls.from_terms(variable, {exponent: coefficient}, low_order)

    def is_zero(self) -> bool:
        return not self.coefficients

    def _get(self, n: int) -> Fraction:
        if n > self.top:
            return Fraction(0)
        return self.coefficients[self.top - n]

    def __getitem__(self, n: int) -> Fraction:
        return coefficient_at(self, n)

    def terms(self) -> Dict[int, Fraction]:
        return {self.top - i: c for i, c in enumerate(self.coefficients) if c != 0}

    def mirror(self) -> LSeries:
        """The L-series F(z^-)."""
        return LSeries(self.variable, -self.top, self.coefficients, -self.low_order)

    def __add__(self, other: "RSeries") -> "RSeries":
        return add(self.mirror(), other.mirror()).mirror()

    def __neg__(self) -> "RSeries":
        return (-self.mirror()).mirror()

    def __sub__(self, other: "RSeries") -> "RSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return (self.mirror() * other).mirror()
        if not isinstance(other, RSeries):
            return NotImplemented
        return mul(self.mirror(), other.mirror()).mirror()

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_series(self)


# ============================================================================
# CONSTRUCTION AND ACCESS
# ============================================================================

def make_series(variable: str, terms: Mapping[int, RationalLike], order: int) -> LSeries:
    """
    Build a canonical LSeries from an exponent -> coefficient mapping.

    Args:
        variable: Symbol name
        terms: Coefficients; missing exponents in the window are zero
        order: Highest known exponent

    Returns:
        The series with its window ending at ``order``
    """
    if not terms:
        return LSeries.zero(variable, order)
    too_high = [n for n in terms if n > order]
    if too_high:
        raise InvalidArgument(f"exponent {max(too_high)} exceeds order {order}")
    start = min(terms)
    coeffs = [Fraction(0)] * (order - start + 1)
    for n, c in terms.items():
        coeffs[n - start] += to_rational(c)
    return _build(variable, start, coeffs, order)


def coefficient_at(a: Union[LSeries, RSeries], n: int) -> Fraction:
    """The coefficient of z^n, or InsufficientPrecision outside the known window."""
    if isinstance(a, RSeries):
        if n < a.low_order:
            raise InsufficientPrecision(f"exponent {n} is below the known window (low order {a.low_order})")
        return a._get(n)
    if n > a.order:
        raise InsufficientPrecision(f"exponent {n} exceeds the known order {a.order}")
    return a._get(n)


def _check_variables(a: LSeries, b: LSeries) -> None:
    if a.variable != b.variable:
        raise VariableMismatch(f"series in {a.variable!r} and {b.variable!r} cannot be combined")


# ============================================================================
# ARITHMETIC
# ============================================================================

def add(a: LSeries, b: LSeries) -> LSeries:
    """Coefficientwise sum; the result is known up to min(order_a, order_b)."""
    _check_variables(a, b)
    order = min(a.order, b.order)
    start = min(a.valuation, b.valuation)
    coeffs = [a._get(n) + b._get(n) for n in range(start, order + 1)]
    return _build(a.variable, start, coeffs, order)


def mul(a: LSeries, b: LSeries) -> LSeries:
    """Cauchy product on the window where every contributing coefficient is known."""
    _check_variables(a, b)
    ac, bc = a.coefficients, b.coefficients
    length = min(len(ac), len(bc))
    coeffs = [
        sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(length)
    ]
    valuation = a.valuation + b.valuation
    order = min(a.order + b.valuation, b.order + a.valuation)
    return _build(a.variable, valuation, coeffs, order)


def div(a: LSeries, b: LSeries) -> LSeries:
    """
    Quotient a/b by long division from the lowest term of b.

    Raises:
        DivisionByZeroSeries: when b has an empty window
    """
    _check_variables(a, b)
    if b.is_zero():
        raise DivisionByZeroSeries(f"divisor is zero up to O({a.variable}^{b.order + 1})")
    ac, bc = a.coefficients, b.coefficients
    length = min(len(ac), len(bc))
    lead = bc[0]
    quotient: List[Fraction] = []
    for k in range(length):
        acc = ac[k]
        for j in range(1, k + 1):
            acc -= bc[j] * quotient[k - j]
        quotient.append(acc / lead)
    valuation = a.valuation - b.valuation
    order = min(a.order - b.valuation, a.valuation + b.order - 2 * b.valuation)
    return _build(a.variable, valuation, quotient, order)


def reciprocal(a: LSeries) -> LSeries:
    """1/a, known to the same relative precision as a."""
    if a.is_zero():
        raise DivisionByZeroSeries(f"cannot invert a series that is zero up to O({a.variable}^{a.order + 1})")
    one = LSeries.constant(a.variable, 1, a.order - a.valuation)
    return div(one, a)


def power(a: LSeries, m: int) -> LSeries:
    """
    Integer power a^m; negative m goes through the reciprocal.

    a^0 is exactly 1, zero series included, reported up to the larger of
    a's order and a's relative precision.
    """
    if m == 0:
        return LSeries.constant(a.variable, 1, max(a.order, a.order - a.valuation, 0))
    if m < 0:
        return power(reciprocal(a), -m)
    result = base = a
    first = True
    while m:
        if m & 1:
            result = base if first else mul(result, base)
            first = False
        m >>= 1
        if m:
            base = mul(base, base)
    return result


# ============================================================================
# SUBSTITUTION
# ============================================================================

def compose(g: LSeries, f: LSeries) -> LSeries:
    """
    Substitute f into g: the sum over n of g_n f^n.

    g's variable is bound; the result is a series in f's variable.

    Raises:
        CompositionValuationError: when valuation(f) < 1, or when g has
            negative exponents and valuation(f) != 1
    """
    if f.is_zero():
        if g.valuation < 0:
            raise CompositionValuationError("cannot substitute a series of unknown valuation into a Laurent series")
        bound = min(f.order, (g.order + 1) * f.valuation - 1)
        value = g._get(0) if g.order >= 0 else Fraction(0)
        return LSeries.constant(f.variable, value, bound)

    v_f = f.valuation
    if v_f < 1:
        raise CompositionValuationError(f"substituted series must have valuation >= 1, got {v_f}")
    if g.valuation < 0 and v_f != 1:
        raise CompositionValuationError("a Laurent outer series needs an inner series of valuation exactly 1")

    bound = (g.order + 1) * v_f - 1
    if g.is_zero():
        return LSeries.zero(f.variable, bound)

    # Horner on sum g_n f^(n - v_g), then shift by f^(v_g)
    shift = g.valuation * v_f
    working = bound - shift
    acc = LSeries.constant(f.variable, g.coefficients[-1], working)
    for c in reversed(g.coefficients[:-1]):
        acc = mul(acc, f) + LSeries.constant(f.variable, c, working)
    result = mul(acc, power(f, g.valuation)) if g.valuation else acc
    if result.order > bound:
        result = result.truncate(bound)
    return result


def exp_standard(variable: str, order: int) -> LSeries:
    """e^u = sum u^n/n! up to u^order."""
    return _build(variable, 0, [Fraction(1, math.factorial(n)) for n in range(order + 1)], order)


def log1p_standard(variable: str, order: int) -> LSeries:
    """log(1+u) = u - u^2/2 + u^3/3 - ... up to u^order."""
    coeffs = [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)]
    return _build(variable, 0, coeffs, order)


def exp_series(a: LSeries) -> LSeries:
    """e^a for a with zero constant term (valuation >= 1)."""
    if a.valuation < 1:
        raise CompositionValuationError(f"exp needs valuation >= 1, got {a.valuation}")
    return compose(exp_standard("u", max(a.order, 0)), a)


def log_series(a: LSeries) -> LSeries:
    """log(a) for a with constant term 1."""
    if a.is_zero() or a.valuation != 0 or a.coefficients[0] != 1:
        raise CompositionValuationError("log needs a series with constant term 1 and no negative exponents")
    return compose(log1p_standard("u", max(a.order, 0)), a - 1)


# ============================================================================
# CALCULUS AND VARIABLE CHANGES
# ============================================================================

def derivative(a: LSeries) -> LSeries:
    """Termwise d/dz; the order drops by one."""
    coeffs = [(a.valuation + i) * c for i, c in enumerate(a.coefficients)]
    return _build(a.variable, a.valuation - 1, coeffs, a.order - 1)


def theta(a: LSeries) -> LSeries:
    """The operator z d/dz: c_n z^n -> n c_n z^n."""
    coeffs = [(a.valuation + i) * c for i, c in enumerate(a.coefficients)]
    return _build(a.variable, a.valuation, coeffs, a.order)


def scale_var(a: LSeries, c: RationalLike) -> LSeries:
    """G(cz): the coefficient at n is multiplied by c^n."""
    c = to_rational(c)
    if c == 0:
        raise InvalidArgument("scaling the variable by 0 is not invertible")
    coeffs = [coef * c ** (a.valuation + i) for i, coef in enumerate(a.coefficients)]
    return _build(a.variable, a.valuation, coeffs, a.order)


def subst_power(a: Union[LSeries, RSeries], m: int) -> Union[LSeries, RSeries]:
    """
    Substitute z -> z^m for a nonzero integer m.

    Positive m keeps the family; negative m swaps L and R.
    """
    if m == 0:
        raise InvalidArgument("z -> z^0 is not a substitution")
    if isinstance(a, RSeries):
        return subst_power(a.mirror(), -m)
    stretched = {m * n: c for n, c in a.terms().items()}
    if m > 0:
        return make_series(a.variable, stretched, m * (a.order + 1) - 1)
    # exponent m*n for n <= order, so everything above m*(order+1) is known
    low = m * (a.order + 1) + 1
    return RSeries.from_terms(a.variable, stretched, low)


# ============================================================================
# TEXT AND WIRE FORMATS
# ============================================================================

def _monomial_text(variable: str, n: int) -> str:
    if n == 0:
        return "1"
    if n == 1:
        return variable
    if n > 0:
        return f"{variable}^{n}"
    return f"{variable}^({n})"


def _big_o(variable: str, n: int) -> str:
    return "O(1)" if n == 0 else f"O({_monomial_text(variable, n)})"


def format_series(a: Union[LSeries, RSeries]) -> str:
    """
    Human-readable form, e.g. "1/2 + 1/4 z + 1/8 z^2 + O(z^3)".

    R-series list terms from the top down and end with the leftward
    remainder O(z^(low_order - 1)).
    """
    if isinstance(a, RSeries):
        items = [(a.top - i, c) for i, c in enumerate(a.coefficients)]
        remainder = _big_o(a.variable, a.low_order - 1)
    else:
        items = [(a.valuation + i, c) for i, c in enumerate(a.coefficients)]
        remainder = _big_o(a.variable, a.order + 1)
    parts: List[str] = []
    for n, c in items:
        if c == 0:
            continue
        magnitude = abs(c)
        mono = _monomial_text(a.variable, n)
        if n == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude} {mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    parts.append(f"+ {remainder}" if parts else remainder)
    return " ".join(parts)


class SeriesPayload(BaseModel):
    """JSON form of a truncated series."""

    variable: str
    valuation: int
    order: int
    coefficients: List[Tuple[str, str]] = Field(
        default_factory=list,
        description="[numerator, denominator] pairs from valuation to order",
    )
    kind: str = Field(default="L", description='"L" for L-series, "R" for R-series stored as its mirror')


def series_to_payload(a: Union[LSeries, RSeries]) -> SeriesPayload:
    kind = "R" if isinstance(a, RSeries) else "L"
    base = a.mirror() if isinstance(a, RSeries) else a
    return SeriesPayload(
        variable=base.variable,
        valuation=base.valuation,
        order=base.order,
        coefficients=[(str(c.numerator), str(c.denominator)) for c in base.coefficients],
        kind=kind,
    )


def series_from_payload(payload: Union[SeriesPayload, Mapping]) -> Union[LSeries, RSeries]:
    if not isinstance(payload, SeriesPayload):
        payload = SeriesPayload.model_validate(payload)
    coeffs = [Fraction(int(num), int(den)) for num, den in payload.coefficients]
    expected = payload.order - payload.valuation + 1
    if len(coeffs) != max(expected, 0):
        raise InvalidArgument(f"payload lists {len(coeffs)} coefficients for a window of {expected}")
    series = _build(payload.variable, payload.valuation, coeffs, payload.order)
    return series.mirror() if payload.kind == "R" else series
