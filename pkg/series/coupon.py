"""
Expected number of trials to collect n distinct coupons.

Three independent routes give the same exact rational:

* the bracket route: expand prod(1 + z(e^(p(c)t) - 1)) with exponential
  polynomial coefficients, take the leftward sum below z^n and integrate
  against e^(-t);
* the closed form over subsets A with |A| < n;
* a subset Markov chain solved backwards.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from series.bracket import leftward_sum
from series.errors import InvalidArgument
from series.exact import ExpPoly, RationalLike, binomial, exppoly_integrate_against_decay, to_rational

logger = logging.getLogger(__name__)

MAX_FORMULA_COUPONS = 24
MAX_ORACLE_COUPONS = 20

METHODS = ("formula", "bracket", "oracle")


@dataclass(frozen=True)
class CouponProblem:
    """Coupon probabilities p(c) and the number n of distinct coupons wanted."""

    probabilities: Tuple[Fraction, ...]
    target: int

    def __post_init__(self):
        probs = tuple(to_rational(p) for p in self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        if not probs:
            raise InvalidArgument("at least one coupon is required")
        if any(p <= 0 for p in probs):
            raise InvalidArgument("every coupon probability must be positive")
        if sum(probs) != 1:
            raise InvalidArgument(f"probabilities sum to {sum(probs)}, not 1")
        if not 1 <= self.target <= len(probs):
            raise InvalidArgument(f"target {self.target} must lie in 1..{len(probs)}")

    @classmethod
    def parse(cls, text: str, target: int) -> "CouponProblem":
        """Build from a comma-separated list such as "1/3,1/3,1/3"."""
        values: List[RationalLike] = [chunk for chunk in (c.strip() for c in text.split(",")) if chunk]
        return cls(tuple(to_rational(v) for v in values), target)

    @property
    def size(self) -> int:
        return len(self.probabilities)


class CouponReport(BaseModel):
    """JSON output of a coupon computation."""

    expected: Tuple[int, int]
    methods_agree: bool
    methods: Dict[str, Tuple[int, int]] = Field(default_factory=dict)


def _subset_weights(probabilities: Sequence[Fraction]) -> List[Fraction]:
    """p(A) for every bitmask A, built from the lowest set bit."""
    weights = [Fraction(0)] * (1 << len(probabilities))
    for mask in range(1, len(weights)):
        low = mask & -mask
        weights[mask] = weights[mask ^ low] + probabilities[low.bit_length() - 1]
    return weights


def _check_size(problem: CouponProblem, cap: int) -> None:
    if problem.size > cap:
        raise InvalidArgument(f"{problem.size} coupons exceed the subset enumeration cap of {cap}")


def closed_form_integrand(problem: CouponProblem) -> ExpPoly:
    """
    Sum over |A| < n of (-1)^(n-1-|A|) C(|C|-|A|-1, |C|-n) e^(p(A) t).
    """
    _check_size(problem, MAX_FORMULA_COUPONS)
    size, n = problem.size, problem.target
    weights = _subset_weights(problem.probabilities)
    terms: Dict[Fraction, Fraction] = {}
    for mask, weight in enumerate(weights):
        a = bin(mask).count("1")
        if a >= n:
            continue
        amplitude = (-1) ** (n - 1 - a) * binomial(size - a - 1, size - n)
        terms[weight] = terms.get(weight, Fraction(0)) + amplitude
    return ExpPoly(terms)


def bracket_integrand(problem: CouponProblem) -> ExpPoly:
    """
    [z^n/(z-1)] prod over c of (1 + z(e^(p(c) t) - 1)).

    The product is a polynomial in z with ExpPoly coefficients; the
    bracket keeps the coefficients of z^0..z^(n-1).
    """
    _check_size(problem, MAX_FORMULA_COUPONS)
    one = ExpPoly.constant(1)
    coefficients: List[ExpPoly] = [one]
    for p in problem.probabilities:
        factor = ExpPoly.exponential(p) - one
        grown = coefficients + [ExpPoly()]
        for k in range(len(coefficients), 0, -1):
            if k <= problem.target - 1:
                grown[k] = grown[k] + coefficients[k - 1] * factor
        coefficients = grown
    return leftward_sum(dict(enumerate(coefficients)), problem.target, ExpPoly())


def expected_trials_bracket(problem: CouponProblem) -> Fraction:
    """Integrate the bracket integrand against e^(-t)."""
    return exppoly_integrate_against_decay(bracket_integrand(problem))


def expected_trials_formula(problem: CouponProblem) -> Fraction:
    """Sum over |A| < n of (-1)^(n-1-|A|) C(|C|-|A|-1, |C|-n) / (1 - p(A))."""
    _check_size(problem, MAX_FORMULA_COUPONS)
    size, n = problem.size, problem.target
    weights = _subset_weights(problem.probabilities)
    total = Fraction(0)
    for mask, weight in enumerate(weights):
        a = bin(mask).count("1")
        if a >= n:
            continue
        total += (-1) ** (n - 1 - a) * binomial(size - a - 1, size - n) / (1 - weight)
    return total


def markov_oracle(problem: CouponProblem) -> Fraction:
    """
    Solve E[S] (1 - p(S)) = 1 + sum over c not in S of p(c) E[S + c].

    States are subsets S of coupons seen so far; E[S] = 0 once |S| = n.
    """
    _check_size(problem, MAX_ORACLE_COUPONS)
    size, n = problem.size, problem.target
    weights = _subset_weights(problem.probabilities)
    expected: Dict[int, Fraction] = {}
    masks = sorted(
        (mask for mask in range(1 << size) if bin(mask).count("1") < n),
        key=lambda mask: -bin(mask).count("1"),
    )
    logger.debug("markov oracle over %d states", len(masks))
    for mask in masks:
        acc = Fraction(1)
        for c, p in enumerate(problem.probabilities):
            bit = 1 << c
            if mask & bit:
                continue
            acc += p * expected.get(mask | bit, Fraction(0))
        expected[mask] = acc / (1 - weights[mask])
    return expected[0]


_ROUTES = {
    "formula": expected_trials_formula,
    "bracket": expected_trials_bracket,
    "oracle": markov_oracle,
}


def solve_coupon(problem: CouponProblem, method: str = "all") -> CouponReport:
    """
    Run one route or all of them and report whether they agree.

    With method="all" the oracle is skipped above its size cap.
    """
    if method == "all":
        chosen = [m for m in METHODS if m != "oracle" or problem.size <= MAX_ORACLE_COUPONS]
    elif method in _ROUTES:
        chosen = [method]
    else:
        raise InvalidArgument(f"unknown method {method!r}; choose from {', '.join(METHODS + ('all',))}")
    values = {m: _ROUTES[m](problem) for m in chosen}
    first: Optional[Fraction] = values[chosen[0]]
    return CouponReport(
        expected=(first.numerator, first.denominator),
        methods_agree=len(set(values.values())) == 1,
        methods={m: (v.numerator, v.denominator) for m, v in values.items()},
    )
