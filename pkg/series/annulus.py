"""
Annulus-dependent expansion of factored rational functions.

A function analytic in inner < |z| < outer has exactly one two-sided
power series there. For a rational function

    scale * z^shift * N(z) / prod((z - r)^m)

that series follows from partial fractions: every pole with |r| >= outer
is expanded in powers of z/r, every pole with |r| <= inner in powers of
r/z. Poles exactly on a boundary circle are accepted and land on the side
they touch; a pole strictly inside the annulus is an error.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from series.errors import InvalidAnnulus, InvalidArgument, PoleInAnnulus
from series.exact import RationalLike, binomial, to_rational
from series.laurent import div, make_series

logger = logging.getLogger(__name__)

INSIDE = "inside"
OUTSIDE = "outside"


# ============================================================================
# TYPES
# ============================================================================

@dataclass(frozen=True)
class FactoredRational:
    """scale * z^shift * numerator(z) / prod((z - root)^multiplicity)."""

    numerator: Tuple[Tuple[int, Fraction], ...]
    poles: Tuple[Tuple[Fraction, int], ...]
    shift: int = 0
    scale: Fraction = Fraction(1)

    @classmethod
    def build(
        cls,
        numerator: Mapping[int, RationalLike],
        poles: Sequence[Tuple[RationalLike, int]],
        shift: int = 0,
        scale: RationalLike = 1,
    ) -> "FactoredRational":
        """Validate and normalize the factored form."""
        terms = {}
        for n, c in numerator.items():
            value = to_rational(c)
            if value != 0:
                terms[int(n)] = terms.get(int(n), Fraction(0)) + value
        roots: Dict[Fraction, int] = {}
        for root, multiplicity in poles:
            root = to_rational(root)
            if root == 0:
                raise InvalidArgument("a pole at 0 belongs in the monomial shift")
            if multiplicity < 1:
                raise InvalidArgument(f"pole {root} has multiplicity {multiplicity}")
            if root in roots:
                raise InvalidArgument(f"pole {root} listed twice")
            roots[root] = multiplicity
        scale = to_rational(scale)
        if scale == 0:
            raise InvalidArgument("scale must be nonzero")
        return cls(
            numerator=tuple(sorted((n, c) for n, c in terms.items() if c != 0)),
            poles=tuple(sorted(roots.items())),
            shift=shift,
            scale=scale,
        )


@dataclass(frozen=True)
class AnnulusSpec:
    """The open region inner < |z| < outer; outer=None means infinity."""

    inner: Fraction
    outer: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "inner", to_rational(self.inner))
        if self.outer is not None:
            object.__setattr__(self, "outer", to_rational(self.outer))
        if self.inner < 0:
            raise InvalidAnnulus(f"inner radius {self.inner} is negative")
        if self.outer is not None and self.inner >= self.outer:
            raise InvalidAnnulus(f"inner radius {self.inner} is not below outer radius {self.outer}")

    def side_of(self, root: Fraction) -> str:
        size = abs(root)
        if size <= self.inner:
            return INSIDE
        if self.outer is not None and size >= self.outer:
            return OUTSIDE
        raise PoleInAnnulus(f"pole {root} lies inside {self.describe()}")

    def describe(self) -> str:
        outer = "inf" if self.outer is None else str(self.outer)
        return f"{self.inner} < |z| < {outer}"


@dataclass(frozen=True)
class PartialFraction:
    """coefficient / (z - root)^power, expanded on one side of the annulus."""

    root: Fraction
    power: int
    coefficient: Fraction
    side: str

    def coefficient_at(self, n: int) -> Fraction:
        j, r = self.power, self.root
        if self.side == OUTSIDE:
            if n < 0:
                return Fraction(0)
            return self.coefficient * (-1) ** j * binomial(n + j - 1, j - 1) / r ** (n + j)
        if n > -j:
            return Fraction(0)
        return self.coefficient * binomial(-n - 1, j - 1) * r ** (-n - j)


@dataclass(frozen=True)
class DoubleExpansion:
    """The unique two-sided expansion of a FactoredRational in an annulus."""

    source: FactoredRational
    annulus: AnnulusSpec
    offset: int
    quotient: Tuple[Fraction, ...] = field(default=())
    fractions: Tuple[PartialFraction, ...] = field(default=())

    def coefficient(self, n: int) -> Fraction:
        k = n - self.offset
        total = Fraction(0)
        if 0 <= k < len(self.quotient):
            total += self.quotient[k]
        for term in self.fractions:
            total += term.coefficient_at(k)
        return self.source.scale * total


class ExpansionWindow(BaseModel):
    """JSON form of a coefficient window of an annulus expansion."""

    annulus: str
    start: int
    stop: int
    coefficients: Dict[int, Tuple[str, str]] = Field(
        default_factory=dict,
        description="exponent -> [numerator, denominator]",
    )
    poles: List[Dict[str, str]] = Field(default_factory=list)


# ============================================================================
# POLYNOMIAL HELPERS
# ============================================================================

def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(n: Sequence[Fraction], d: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    """Quotient and remainder of ascending coefficient lists; d is monic-free but nonzero-led."""
    remainder = list(n)
    degree = len(d) - 1
    lead = d[-1]
    if len(remainder) <= degree:
        return [], remainder
    quotient = [Fraction(0)] * (len(remainder) - degree)
    for k in range(len(remainder) - 1, degree - 1, -1):
        c = remainder[k] / lead
        quotient[k - degree] = c
        if c:
            for i, y in enumerate(d):
                remainder[k - degree + i] -= c * y
    return quotient, remainder[:degree]


def _taylor_shift(poly: Sequence[Fraction], r: Fraction) -> Dict[int, Fraction]:
    """Coefficients of poly(r + u) in u."""
    out: Dict[int, Fraction] = {}
    for i, a in enumerate(poly):
        if a == 0:
            continue
        for j in range(i + 1):
            out[j] = out.get(j, Fraction(0)) + a * binomial(i, j) * r ** (i - j)
    return out


def _linear_power(c: Fraction, m: int) -> List[Fraction]:
    """(u + c)^m as an ascending list."""
    return [binomial(m, j) * c ** (m - j) for j in range(m + 1)]


def _principal_part(remainder: Sequence[Fraction], root: Fraction, multiplicity: int,
                    others: Sequence[Tuple[Fraction, int]]) -> List[Fraction]:
    """
    Coefficients A_1..A_m of A_j/(z - root)^j.

    With h(z) = remainder(z) / prod over the other poles, A_j is the
    coefficient of u^(m-j) in h(root + u).
    """
    top = multiplicity - 1
    numer = {j: c for j, c in _taylor_shift(remainder, root).items() if j <= top}
    denom_poly = [Fraction(1)]
    for other, m in others:
        denom_poly = _poly_mul(denom_poly, _linear_power(root - other, m))
    denom = {j: c for j, c in enumerate(denom_poly) if j <= top and c != 0}
    h = div(make_series("u", numer, top), make_series("u", denom, top))
    return [h._get(multiplicity - j) for j in range(1, multiplicity + 1)]


# ============================================================================
# EXPANSION
# ============================================================================

def expand_in_annulus(f: FactoredRational, annulus: AnnulusSpec) -> DoubleExpansion:
    """
    Partial-fraction expansion of f valid in the given annulus.

    Args:
        f: Factored rational function
        annulus: Region of validity

    Returns:
        A DoubleExpansion answering coefficient queries in closed form

    Raises:
        PoleInAnnulus: when a pole lies strictly inside the annulus
    """
    sides = {root: annulus.side_of(root) for root, _ in f.poles}

    if not f.numerator:
        return DoubleExpansion(source=f, annulus=annulus, offset=f.shift)

    low = f.numerator[0][0]
    numer = [Fraction(0)] * (f.numerator[-1][0] - low + 1)
    for n, c in f.numerator:
        numer[n - low] = c

    denominator = [Fraction(1)]
    for root, m in f.poles:
        denominator = _poly_mul(denominator, _linear_power(-root, m))

    quotient, remainder = _poly_divmod(numer, denominator)
    fractions: List[PartialFraction] = []
    for root, m in f.poles:
        others = [(s, k) for s, k in f.poles if s != root]
        for j, a in enumerate(_principal_part(remainder, root, m, others), start=1):
            if a != 0:
                fractions.append(PartialFraction(root, j, a, sides[root]))

    logger.debug(
        "expanded %d poles in %s: %s",
        len(f.poles), annulus.describe(), {str(r): s for r, s in sides.items()},
    )
    return DoubleExpansion(
        source=f,
        annulus=annulus,
        offset=f.shift + low,
        quotient=tuple(quotient),
        fractions=tuple(fractions),
    )


def coefficient_in_annulus(e: DoubleExpansion, n: int) -> Fraction:
    """The coefficient of z^n in the expansion valid in e's annulus."""
    return e.coefficient(n)


def expansion_window(e: DoubleExpansion, start: int, stop: int) -> Dict[int, Fraction]:
    """Coefficients at exponents start..stop inclusive."""
    if start > stop:
        raise InvalidArgument(f"empty window {start}..{stop}")
    return {n: e.coefficient(n) for n in range(start, stop + 1)}


def annulus_classification(e: DoubleExpansion) -> List[Dict[str, str]]:
    """Each pole with its multiplicity and the side of the annulus it falls on."""
    return [
        {"root": str(root), "multiplicity": str(m), "side": e.annulus.side_of(root)}
        for root, m in e.source.poles
    ]


def window_report(e: DoubleExpansion, start: int, stop: int) -> ExpansionWindow:
    window = expansion_window(e, start, stop)
    return ExpansionWindow(
        annulus=e.annulus.describe(),
        start=start,
        stop=stop,
        coefficients={n: (str(c.numerator), str(c.denominator)) for n, c in window.items()},
        poles=annulus_classification(e),
    )


def parse_poles(text: str) -> List[Tuple[Fraction, int]]:
    """
    Parse "r1^m1,r2^m2" pole lists; a missing ^m means multiplicity 1.

    Roots are rational literals such as 2, -1/2 or 3/4.
    """
    poles: List[Tuple[Fraction, int]] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        root_text, _, mult_text = chunk.partition("^")
        try:
            multiplicity = int(mult_text) if mult_text else 1
        except ValueError as e:
            raise InvalidArgument(f"bad multiplicity in pole {chunk!r}") from e
        poles.append((to_rational(root_text), multiplicity))
    if not poles:
        raise InvalidArgument("no poles given")
    return poles


def parse_radius(text: str) -> Optional[Fraction]:
    """A rational radius, or None for "inf"."""
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return None
    return to_rational(text)
