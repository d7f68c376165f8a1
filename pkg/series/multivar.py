"""
Bivariate series in (w, z) and the identities built on them.

A BiSeries stores its nonzero coefficients sparsely. Its known window is a
lower quadrant: every exponent pair (p, q) with p <= max_w and q <= max_z
is known, and coefficients with p < min_w or q < min_z are zero. A max of
None means that direction is exact (Laurent polynomials are exact in both).

Monomial substitution keeps the window of the source series and records
the substitution matrix as a frame, so coefficient queries are answered
by mapping the query point back to its preimage.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, NamedTuple, Optional, Tuple

from series.bracket import bracket
from series.errors import (
    CompositionValuationError,
    DivisionByZeroSeries,
    InsufficientPrecision,
    InvalidArgument,
    VariableMismatch,
)
from series.exact import RationalLike, binomial, to_rational
from series.laurent import (
    LSeries,
    RSeries,
    coefficient_at,
    compose,
    div,
    exp_series,
    exp_standard,
    make_series,
    mul,
    power,
)

logger = logging.getLogger(__name__)

Point = Tuple[int, int]
Matrix = Tuple[int, int, int, int]
Variables = Tuple[str, str]

WZ: Variables = ("w", "z")
IDENTITY: Matrix = (1, 0, 0, 1)


def _cap(a: Optional[int], b: Optional[int]) -> Optional[int]:
    """min() with None standing for +infinity."""
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _plus(a: Optional[int], b: int) -> Optional[int]:
    return None if a is None else a + b


def _within(point: Point, max_w: Optional[int], max_z: Optional[int]) -> bool:
    return (max_w is None or point[0] <= max_w) and (max_z is None or point[1] <= max_z)


def _preimage(matrix: Matrix, p: int, q: int) -> Optional[Point]:
    k, l, m, n = matrix
    det = k * n - l * m
    a, b = n * p - m * q, -l * p + k * q
    if a % det or b % det:
        return None
    return a // det, b // det


def _compose_frames(outer: Matrix, inner: Matrix) -> Matrix:
    k, l, m, n = outer
    a, b, c, d = inner
    return (k * a + m * b, l * a + n * b, k * c + m * d, l * c + n * d)


@dataclass(frozen=True, eq=False)
class BiSeries:
    """Sparse bivariate series with a lower-quadrant known window."""

    variables: Variables
    support: Mapping[Point, Fraction]
    min_w: int = 0
    max_w: Optional[int] = None
    min_z: int = 0
    max_z: Optional[int] = None
    frame: Optional[Matrix] = None

    def __post_init__(self):
        cleaned = {(int(p), int(q)): to_rational(c) for (p, q), c in self.support.items()}
        cleaned = {pt: c for pt, c in cleaned.items() if c != 0}
        object.__setattr__(self, "support", cleaned)
        if self.frame is None:
            for p, q in cleaned:
                if p < self.min_w or q < self.min_z or not _within((p, q), self.max_w, self.max_z):
                    raise InvalidArgument(f"support point {(p, q)} lies outside the known window")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def polynomial(cls, terms: Mapping[Point, RationalLike], variables: Variables = WZ) -> "BiSeries":
        """Exact Laurent polynomial."""
        points = [pt for pt, c in terms.items() if to_rational(c) != 0]
        min_w = min((p for p, _ in points), default=0)
        min_z = min((q for _, q in points), default=0)
        return cls(variables, dict(terms), min_w=min_w, min_z=min_z)

    @classmethod
    def monomial(cls, p: int, q: int, coefficient: RationalLike = 1, variables: Variables = WZ) -> "BiSeries":
        return cls.polynomial({(p, q): coefficient}, variables)

    @classmethod
    def constant(cls, value: RationalLike, variables: Variables = WZ) -> "BiSeries":
        return cls.polynomial({(0, 0): value}, variables)

    @classmethod
    def from_lseries(
        cls,
        a: LSeries,
        direction: Point = (0, 1),
        variables: Variables = WZ,
        exact: bool = False,
    ) -> "BiSeries":
        """
        Embed a univariate series along a ray: t^k -> w^(i k) z^(j k).

        With exact=True the known window of ``a`` is taken as its whole
        support (use this for polynomials).
        """
        i, j = direction
        if i < 0 or j < 0 or (i, j) == (0, 0):
            raise InvalidArgument(f"embedding direction {direction} must be nonnegative and nonzero")
        support = {(i * n, j * n): c for n, c in a.terms().items()}
        if exact:
            max_w = max_z = None
        else:
            max_w = i * a.order if i > 0 else None
            max_z = j * a.order if j > 0 else None
        low = a.valuation
        return cls(variables, support, min_w=i * low, max_w=max_w, min_z=j * low, max_z=max_z)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def is_exact(self) -> bool:
        return self.max_w is None and self.max_z is None

    def coefficient(self, p: int, q: int) -> Fraction:
        """[w^p z^q], or InsufficientPrecision outside the known window."""
        if self.frame is not None:
            pre = _preimage(self.frame, p, q)
            if pre is None:
                return Fraction(0)
        else:
            pre = (p, q)
        if pre[0] < self.min_w or pre[1] < self.min_z:
            return Fraction(0)
        if not _within(pre, self.max_w, self.max_z):
            raise InsufficientPrecision(
                f"[{self.variables[0]}^{p} {self.variables[1]}^{q}] is outside the known window"
            )
        return self.support.get((p, q), Fraction(0))

    def truncated(self, max_w: Optional[int], max_z: Optional[int]) -> "BiSeries":
        """Shrink the known window."""
        _require_plain(self)
        new_w, new_z = _cap(self.max_w, max_w), _cap(self.max_z, max_z)
        return BiSeries(
            self.variables,
            {pt: c for pt, c in self.support.items() if _within(pt, new_w, new_z)},
            self.min_w, new_w, self.min_z, new_z,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.support == other.support
            and (self.max_w, self.max_z, self.frame) == (other.max_w, other.max_z, other.frame)
        )

    __hash__ = None

    def __add__(self, other: "BiSeries") -> "BiSeries":
        return bi_add(self, other)

    def __neg__(self) -> "BiSeries":
        return self * Fraction(-1)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return bi_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiSeries(
                self.variables,
                {pt: c * other for pt, c in self.support.items()},
                self.min_w, self.max_w, self.min_z, self.max_z, self.frame,
            )
        if not isinstance(other, BiSeries):
            return NotImplemented
        return bi_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiSeries":
        return bi_power(self, e)


def _require_plain(*series: BiSeries) -> None:
    for s in series:
        if s.frame is not None:
            raise InvalidArgument("a substituted series supports only brackets and coefficient queries")


def _check_variables(a: BiSeries, b: BiSeries) -> None:
    if a.variables != b.variables:
        raise VariableMismatch(f"variables {a.variables} and {b.variables} differ")


# ============================================================================
# ARITHMETIC
# ============================================================================

def bi_add(a: BiSeries, b: BiSeries) -> BiSeries:
    _check_variables(a, b)
    _require_plain(a, b)
    max_w, max_z = _cap(a.max_w, b.max_w), _cap(a.max_z, b.max_z)
    total: Dict[Point, Fraction] = dict(a.support)
    for pt, c in b.support.items():
        total[pt] = total.get(pt, Fraction(0)) + c
    return BiSeries(
        a.variables,
        {pt: c for pt, c in total.items() if _within(pt, max_w, max_z)},
        min(a.min_w, b.min_w), max_w, min(a.min_z, b.min_z), max_z,
    )


def bi_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    """Convolution on the largest window where every contributing term is known."""
    _check_variables(a, b)
    _require_plain(a, b)
    max_w = _cap(_plus(a.max_w, b.min_w), _plus(b.max_w, a.min_w))
    max_z = _cap(_plus(a.max_z, b.min_z), _plus(b.max_z, a.min_z))
    out: Dict[Point, Fraction] = {}
    for (p1, q1), c1 in a.support.items():
        for (p2, q2), c2 in b.support.items():
            pt = (p1 + p2, q1 + q2)
            if _within(pt, max_w, max_z):
                out[pt] = out.get(pt, Fraction(0)) + c1 * c2
    return BiSeries(a.variables, out, a.min_w + b.min_w, max_w, a.min_z + b.min_z, max_z)


def bi_power(a: BiSeries, e: int) -> BiSeries:
    """Nonnegative integer power."""
    if e < 0:
        raise InvalidArgument("negative powers of a bivariate series go through bi_div_unit")
    result = BiSeries.constant(1, a.variables)
    base = a
    while e:
        if e & 1:
            result = bi_mul(result, base)
        e >>= 1
        if e:
            base = bi_mul(base, base)
    return result


def bi_div_unit(a: BiSeries, b: BiSeries, box: Optional[Point] = None) -> BiSeries:
    """
    Quotient a/b where b is a power series with b(0,0) != 0.

    Args:
        a: Dividend
        b: Divisor anchored at (0,0), no negative exponents
        box: Optional (max_w, max_z) cap; required when the quotient
            would otherwise be infinite

    Raises:
        DivisionByZeroSeries: when b(0,0) = 0
        InsufficientPrecision: when no finite window is determined
    """
    _check_variables(a, b)
    _require_plain(a, b)
    if b.min_w < 0 or b.min_z < 0:
        raise InvalidArgument("divisor must not have negative exponents")
    lead = b.support.get((0, 0), Fraction(0))
    if lead == 0:
        raise DivisionByZeroSeries("divisor has zero constant term")

    rest = [(pt, c) for pt, c in b.support.items() if pt != (0, 0)]
    if not rest and b.is_exact():
        quotient = a * (1 / lead)
        return quotient.truncated(*box) if box else quotient

    cap_w, cap_z = box if box else (None, None)
    max_w = _cap(_cap(a.max_w, _plus(b.max_w, a.min_w)), cap_w)
    max_z = _cap(_cap(a.max_z, _plus(b.max_z, a.min_z)), cap_z)
    if max_w is None or max_z is None:
        raise InsufficientPrecision("quotient is an infinite series; pass a box")

    min_w, min_z = a.min_w, a.min_z
    out: Dict[Point, Fraction] = {}
    for p in range(min_w, max_w + 1):
        for q in range(min_z, max_z + 1):
            value = a.support.get((p, q), Fraction(0))
            for (i, j), c in rest:
                prev = out.get((p - i, q - j))
                if prev is not None:
                    value -= c * prev
            if value != 0:
                out[(p, q)] = value / lead
    return BiSeries(a.variables, out, min_w, max_w, min_z, max_z)


# ============================================================================
# BRACKETS AND SUBSTITUTION
# ============================================================================

def bi_bracket(f: BiSeries, g: BiSeries) -> Fraction:
    """
    [F(w,z)] G(w,z) for a Laurent polynomial F.

    Raises:
        InsufficientPrecision: when G is unknown at a support point of F
    """
    _check_variables(f, g)
    if not f.is_exact():
        raise InvalidArgument("the bracket argument must be a Laurent polynomial")
    return sum((c * g.coefficient(p, q) for (p, q), c in f.support.items()), Fraction(0))


def partial_bracket(
    f: Mapping[int, RationalLike],
    g: BiSeries,
    v: str,
    order: Optional[int] = None,
) -> LSeries:
    """
    Bracket out one variable: [F(v)]_v G, a series in the other variable.

    Args:
        f: Laurent polynomial in v as exponent -> coefficient
        g: Bivariate series
        v: The variable to bracket out
        order: Truncation order of the result when g is exact in the
            remaining variable

    Returns:
        LSeries in the remaining variable
    """
    _require_plain(g)
    if v not in g.variables:
        raise VariableMismatch(f"{v!r} is not one of {g.variables}")
    index = g.variables.index(v)
    other = g.variables[1 - index]
    max_v = g.max_w if index == 0 else g.max_z
    max_other = g.max_z if index == 0 else g.max_w
    min_other = g.min_z if index == 0 else g.min_w

    weights = {int(n): to_rational(c) for n, c in f.items() if to_rational(c) != 0}
    if max_v is not None and any(n > max_v for n in weights):
        raise InsufficientPrecision(f"[{v}^{max(weights)}] is beyond the known order {max_v} in {v}")

    acc: Dict[int, Fraction] = {}
    for pt, c in g.support.items():
        weight = weights.get(pt[index])
        if weight is not None:
            acc[pt[1 - index]] = acc.get(pt[1 - index], Fraction(0)) + weight * c

    result_order = _cap(max_other, order)
    if result_order is None:
        result_order = max(acc, default=min_other - 1)
    return make_series(other, {n: c for n, c in acc.items() if n <= result_order}, result_order)


def monomial_substitute(
    g: BiSeries,
    matrix: Matrix,
    scales: Tuple[RationalLike, RationalLike] = (1, 1),
) -> BiSeries:
    """
    Substitute w -> a w^k z^l and z -> b w^m z^n.

    The support point (p, q) moves to (kp + mq, lp + nq) and its
    coefficient picks up a^p b^q.

    Raises:
        InvalidArgument: on zero determinant kn - lm or a zero scale
    """
    k, l, m, n = matrix
    if k * n - l * m == 0:
        raise InvalidArgument(f"substitution matrix {matrix} is singular")
    a, b = to_rational(scales[0]), to_rational(scales[1])
    if a == 0 or b == 0:
        raise InvalidArgument("substitution scales must be nonzero")

    moved = {
        (k * p + m * q, l * p + n * q): c * a ** p * b ** q
        for (p, q), c in g.support.items()
    }
    if g.is_exact():
        return BiSeries.polynomial(moved, g.variables)
    if tuple(matrix) == IDENTITY:
        return BiSeries(g.variables, moved, g.min_w, g.max_w, g.min_z, g.max_z, g.frame)
    frame = _compose_frames(tuple(matrix), g.frame or IDENTITY)
    return BiSeries(g.variables, moved, g.min_w, g.max_w, g.min_z, g.max_z, frame)


def _composition_depth(a: BiSeries, box: Optional[Point]) -> Tuple[BiSeries, int]:
    _require_plain(a)
    if any(p < 0 or q < 0 for p, q in a.support):
        raise CompositionValuationError("substituted series must not have negative exponents")
    if (0, 0) in a.support:
        raise CompositionValuationError("substituted series must have zero constant term")
    cap_w, cap_z = box if box else (None, None)
    max_w, max_z = _cap(a.max_w, cap_w), _cap(a.max_z, cap_z)
    if max_w is None or max_z is None:
        raise InsufficientPrecision("composition needs a bounded box")
    inner = BiSeries(
        a.variables,
        {pt: c for pt, c in a.support.items() if _within(pt, max_w, max_z)},
        0, max_w, 0, max_z,
    )
    if not inner.support:
        return inner, 0
    lowest = min(p + q for p, q in inner.support)
    return inner, (max_w + max_z) // lowest


def bi_compose(g: LSeries, a: BiSeries, box: Optional[Point] = None) -> BiSeries:
    """
    G(A(w,z)) for a power series G and a bivariate A with A(0,0) = 0.

    Terms G_k A^k with k beyond the box degree cannot reach the window, so
    G must be known up to that degree.
    """
    if g.valuation < 0:
        raise CompositionValuationError("outer series must be a power series")
    inner, depth = _composition_depth(a, box)
    if g.order < depth:
        raise InsufficientPrecision(f"outer series known to order {g.order}, composition needs {depth}")
    acc = BiSeries(a.variables, {(0, 0): g._get(depth)}, 0, inner.max_w, 0, inner.max_z)
    for k in range(depth - 1, -1, -1):
        term = BiSeries(a.variables, {(0, 0): g._get(k)}, 0, inner.max_w, 0, inner.max_z)
        acc = bi_add(bi_mul(acc, inner), term)
    return acc


def bi_exp(a: BiSeries, box: Optional[Point] = None) -> BiSeries:
    """e^A(w,z) for A without constant term."""
    _, depth = _composition_depth(a, box)
    return bi_compose(exp_standard("u", depth), a, box)


# ============================================================================
# IDENTITY SUITE
# ============================================================================

class IdentityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


class SaalschutzResult(NamedTuple):
    sum_side: Fraction
    middle_side: Fraction
    product_side: Fraction
    equal: bool


class DixonResult(NamedTuple):
    bracket_side: Fraction
    sum_side: Fraction
    closed_form: Fraction
    all_equal: bool


def _one_plus(index: int) -> BiSeries:
    return BiSeries.polynomial({(0, 0): 1, (1, 0) if index == 0 else (0, 1): 1})


def _w_minus_z() -> BiSeries:
    return BiSeries.polynomial({(1, 0): 1, (0, 1): -1})


def _one_minus_wz() -> BiSeries:
    return BiSeries.polynomial({(0, 0): 1, (1, 1): -1})


@lru_cache(maxsize=None)
def _gs_outer(p: int, q: int, r: int, s: int, max_w: int, max_z: int) -> BiSeries:
    """G/(1 - wz) for G = (1+w)^p (1+z)^q (w-z)^r / (1-wz)^s."""
    numer = bi_power(_one_plus(0), p) * bi_power(_one_plus(1), q) * bi_power(_w_minus_z(), r)
    return bi_div_unit(numer, bi_power(_one_minus_wz(), s + 1), box=(max_w, max_z))


@lru_cache(maxsize=None)
def _gs_factor(kind: str, e: int, max_w: int, max_z: int) -> BiSeries:
    """Cached powers of the factors of G(w/(1+z), z/(1+w)) on a fixed box."""
    box = (max_w, max_z)
    if e == 0:
        return BiSeries.constant(1).truncated(*box)
    if kind == "X":
        return bi_div_unit(BiSeries.monomial(1, 0), _one_plus(1), box=box)
    if kind == "Y":
        return bi_div_unit(BiSeries.monomial(0, 1), _one_plus(0), box=box)
    x, y = _gs_factor("X", 1, *box), _gs_factor("Y", 1, *box)
    if kind == "1+X":
        base = BiSeries.constant(1) + x
    elif kind == "1+Y":
        base = BiSeries.constant(1) + y
    elif kind == "X-Y":
        base = x - y
    elif kind == "1-XY":
        base = BiSeries.constant(1) - x * y
    else:
        raise InvalidArgument(f"unknown factor {kind!r}")
    return bi_mul(_gs_factor(kind, e - 1, *box), base)


@lru_cache(maxsize=None)
def _gs_inner(p: int, q: int, r: int, s: int, max_w: int, max_z: int) -> BiSeries:
    box = (max_w, max_z)
    numer = bi_mul(
        bi_mul(_gs_factor("1+X", p, *box), _gs_factor("1+Y", q, *box)),
        _gs_factor("X-Y", r, *box),
    )
    return bi_div_unit(numer, _gs_factor("1-XY", s, *box), box=box)


def _gs_test_function(k: int, l: int) -> BiSeries:
    """w^k (1 + 1/z)^k z^l (1 + 1/w)^l, expanded exactly."""
    terms: Dict[Point, Fraction] = {}
    for i in range(k + 1):
        for j in range(l + 1):
            terms[(k - j, l - i)] = binomial(k, i) * binomial(l, j)
    return BiSeries.polynomial(terms)


def gessel_stanton_check(
    k: int, l: int, p: int, q: int, r: int, s: int,
    box: Optional[Point] = None,
) -> IdentityCheck:
    """
    Both sides of the Gessel-Stanton bracket transformation.

    F = w^k z^l and G = (1+w)^p (1+z)^q (w-z)^r / (1-wz)^s. The left side
    is [F] G/(1-wz); the right side brackets F(w(1+1/z), z(1+1/w)) against
    G(w/(1+z), z/(1+w)).

    Args:
        box: Known window used for both expansions; defaults to (k, l).
            Drivers pass one shared box so the expansions are cached.
    """
    if min(k, l, p, q, r, s) < 0:
        raise InvalidArgument("Gessel-Stanton parameters must be nonnegative")
    max_w, max_z = box if box else (k, l)
    if max_w < k or max_z < l:
        raise InsufficientPrecision(f"box {(max_w, max_z)} does not cover {(k, l)}")
    lhs = _gs_outer(p, q, r, s, max_w, max_z).coefficient(k, l)
    rhs = bi_bracket(_gs_test_function(k, l), _gs_inner(p, q, r, s, max_w, max_z))
    return IdentityCheck(lhs, rhs, lhs == rhs)


def saalschutz(k: int, l: int, m: int, n: int) -> SaalschutzResult:
    """Saalschutz's identity by direct summation, bivariate expansion and closed form."""
    if min(k, l, m, n) < 0:
        raise InvalidArgument("Saalschutz parameters must be nonnegative")
    sum_side = sum(
        (binomial(m, k - r) * binomial(n, l - r) * binomial(m + n + r, r) for r in range(min(k, l) + 1)),
        Fraction(0),
    )
    middle = bi_power(_one_plus(0), m + l) * bi_power(_one_plus(1), n + k)
    middle_side = middle.coefficient(k, l)
    product_side = binomial(m + l, k) * binomial(n + k, l)
    return SaalschutzResult(sum_side, middle_side, product_side, sum_side == middle_side == product_side)


def dixon(l: int, m: int, n: int) -> DixonResult:
    """Dixon's identity: a bivariate coefficient, an alternating sum and a closed form."""
    if min(l, m, n) < 0:
        raise InvalidArgument("Dixon parameters must be nonnegative")
    box = (l + n, m + n)
    expansion = bi_div_unit(
        bi_power(_w_minus_z(), l + m),
        bi_power(_one_minus_wz(), l + m + 1),
        box=box,
    )
    bracket_side = expansion.coefficient(*box)
    span = l + m + n
    sum_side = sum(
        (
            (-1) ** ((k + m) % 2)
            * binomial(l + m, k + m) * binomial(m + n, k + n) * binomial(n + l, k + l)
            for k in range(-span, span + 1)
        ),
        Fraction(0),
    )
    closed_form = Fraction(
        (-1) ** m * math.factorial(span),
        math.factorial(l) * math.factorial(m) * math.factorial(n),
    )
    return DixonResult(bracket_side, sum_side, closed_form, bracket_side == sum_side == closed_form)


def gessel_stanton_saalschutz(k: int, l: int, m: int, n: int, box: Optional[Point] = None) -> IdentityCheck:
    """The transformation with F = w^k z^l and G = (1+w)^m (1+z)^n / (1-wz)^(m+n)."""
    return gessel_stanton_check(k, l, m, n, 0, m + n, box=box)


def gessel_stanton_dixon(l: int, m: int, n: int, box: Optional[Point] = None) -> IdentityCheck:
    """The transformation with F = w^(l+n) z^(m+n) and G = (w-z)^(l+m) / (1-wz)^(l+m)."""
    return gessel_stanton_check(l + n, m + n, 0, 0, l + m, l + m, box=box)


def random_graph_coeff(u: LSeries, v: LSeries, m: int, n: int) -> Fraction:
    """
    [w^m z^n] e^(U(wz)/w + V(wz)) reduced to one variable.

    Equals (1/(n-m)!) [z^n] U(z)^(n-m) e^V(z); zero when n < m.

    Raises:
        InvalidArgument: when U(0) != 0
    """
    if not u.is_zero() and u.valuation < 1:
        raise InvalidArgument("U must satisfy U(0) = 0")
    if m < 0 or n < 0:
        raise InvalidArgument("m and n must be nonnegative")
    if n < m:
        return Fraction(0)
    product = mul(power(u, n - m), exp_series(v))
    return coefficient_at(product, n) / math.factorial(n - m)


def random_graph_series(u: LSeries, v: LSeries, box: Point) -> BiSeries:
    """e^(U(wz)/w + V(wz)) as a bivariate series on the given box; U and V are read as exact polynomials."""
    exponent = bi_mul(BiSeries.monomial(-1, 0), BiSeries.from_lseries(u, (1, 1), exact=True))
    exponent = bi_add(exponent, BiSeries.from_lseries(v, (1, 1), exact=True))
    return bi_exp(exponent, box)


def random_graph_coeff_bivariate(u: LSeries, v: LSeries, m: int, n: int) -> Fraction:
    """
    The same coefficient via w -> 1/w, z -> wz on the bivariate series.

    The query monomial w^m z^n moves to w^(n-m) z^n.
    """
    g = random_graph_series(u, v, (m, n))
    moved = monomial_substitute(g, (-1, 0, 1, 1))
    return moved.coefficient(n - m, n)


def shifted_diagonal_check(
    f: Mapping[int, RationalLike],
    g: LSeries,
    a: RationalLike,
) -> IdentityCheck:
    """
    [F(z)] G(z)/(1-z) against [F(1+az)] G(z/(a+z)).

    Args:
        f: Polynomial F as exponent -> coefficient, nonnegative exponents
        g: Power series with G(0) = 0, known at least to deg F
        a: Nonzero rational
    """
    a = to_rational(a)
    if a == 0:
        raise InvalidArgument("a must be nonzero")
    if any(int(e) < 0 for e in f):
        raise InvalidArgument("F must be a polynomial")
    if not g.is_zero() and g.valuation < 1:
        raise InvalidArgument("G must satisfy G(0) = 0")
    var = g.variable
    degree = max((int(e) for e in f), default=0)
    if g.order < degree:
        raise InsufficientPrecision(f"G known to order {g.order}, F has degree {degree}")

    f_terms = {int(e): to_rational(c) for e, c in f.items()}
    one_minus_z = make_series(var, {0: 1, 1: -1}, g.order)
    lhs = bracket(RSeries.from_terms(var, f_terms, 0), div(g, one_minus_z))

    shifted: Dict[int, Fraction] = {}
    for e, c in f_terms.items():
        for j in range(e + 1):
            shifted[j] = shifted.get(j, Fraction(0)) + c * binomial(e, j) * a ** j
    inner = div(make_series(var, {1: 1}, g.order), make_series(var, {0: a, 1: 1}, g.order))
    rhs = bracket(RSeries.from_terms(var, shifted, 0), compose(g, inner))
    return IdentityCheck(lhs, rhs, lhs == rhs)
