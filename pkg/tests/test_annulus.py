"""Tests for region-dependent expansions of rational functions."""

from fractions import Fraction

import pytest

from series.annulus import (
    INSIDE,
    OUTSIDE,
    AnnulusSpec,
    FactoredRational,
    annulus_classification,
    coefficient_in_annulus,
    expand_in_annulus,
    expansion_window,
    parse_poles,
    parse_radius,
    window_report,
)
from series.errors import InvalidAnnulus, InvalidArgument, PoleInAnnulus
from series.laurent import coefficient_at, div, make_series, mul, power

HALF = Fraction(1, 2)

# 1/(2-z) written as -1/(z-2)
ONE_OVER_TWO_MINUS_Z = FactoredRational.build({0: -1}, [(2, 1)])

# (z^2/2 - 2z + 1/2) / ((z-2)(z-1/2)) = 1/2 - 1/(z-2) + (1/4)/(z-1/2)
TWO_POLES = FactoredRational.build({2: HALF, 1: -2, 0: HALF}, [(2, 1), (HALF, 1)])

# pole moduli for random rationals
MAGNITUDES = [Fraction(1, 3), HALF, Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]


class TestSinglePole:
    def test_inside_disc(self):
        e = expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(0, 2))
        assert [e.coefficient(n) for n in range(5)] == [Fraction(1, 2 ** (n + 1)) for n in range(5)]
        assert e.coefficient(-1) == 0

    def test_outside_disc(self):
        e = expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(2))
        assert [e.coefficient(n) for n in (-1, -2, -3, -4)] == [-1, -2, -4, -8]
        assert e.coefficient(0) == 0
        assert e.coefficient(3) == 0

    def test_shift_and_scale(self):
        f = FactoredRational.build({0: -1}, [(2, 1)], shift=2, scale=3)
        e = expand_in_annulus(f, AnnulusSpec(0, 2))
        assert e.coefficient(1) == 0
        assert e.coefficient(2) == Fraction(3, 2)
        assert e.coefficient(4) == Fraction(3, 8)

    def test_lucky_constant_term(self):
        # -z/(1-z) = z/(z-1) has different constant terms on either side of |z| = 1
        f = FactoredRational.build({1: 1}, [(1, 1)])
        assert coefficient_in_annulus(expand_in_annulus(f, AnnulusSpec(0, 1)), 0) == 0
        assert coefficient_in_annulus(expand_in_annulus(f, AnnulusSpec(1)), 0) == 1


class TestTwoPoles:
    def test_middle_annulus(self):
        e = expand_in_annulus(TWO_POLES, AnnulusSpec(HALF, 2))
        window = expansion_window(e, -2, 2)
        assert [window[n] for n in range(-2, 3)] == [
            Fraction(1, 8), Fraction(1, 4), 1, Fraction(1, 4), Fraction(1, 8)
        ]

    def test_inner_disc(self):
        e = expand_in_annulus(TWO_POLES, AnnulusSpec(0, HALF))
        assert e.coefficient(3) == Fraction(1, 16) - 4
        assert e.coefficient(2) == Fraction(1, 8) - 2
        assert e.coefficient(-1) == 0

    def test_outer_region(self):
        e = expand_in_annulus(TWO_POLES, AnnulusSpec(2))
        assert e.coefficient(0) == HALF
        assert e.coefficient(-1) == -1 + Fraction(1, 4)
        assert e.coefficient(1) == 0

    def test_regions_differ(self):
        rows = [
            expansion_window(expand_in_annulus(TWO_POLES, annulus), -3, 3)
            for annulus in (AnnulusSpec(0, HALF), AnnulusSpec(HALF, 2), AnnulusSpec(2))
        ]
        assert rows[0] != rows[1] != rows[2]


class TestAgainstTaylorSeries:
    def test_matches_series_division(self):
        # (1 + z^3) / ((z-2)(z+3)^2) near 0
        f = FactoredRational.build({0: 1, 3: 1}, [(2, 1), (-3, 2)])
        e = expand_in_annulus(f, AnnulusSpec(0, 2))
        order = 10
        numerator = make_series("z", {0: 1, 3: 1}, order)
        denominator = mul(make_series("z", {0: -2, 1: 1}, order), power(make_series("z", {0: 3, 1: 1}, order), 2))
        taylor = div(numerator, denominator)
        for n in range(order + 1):
            assert e.coefficient(n) == coefficient_at(taylor, n)

    def test_double_pole(self):
        # 1/(1-z)^2 = sum (n+1) z^n, and z^-2 (1 - 1/z)^-2 outside
        f = FactoredRational.build({0: 1}, [(1, 2)])
        near = expand_in_annulus(f, AnnulusSpec(0, 1))
        far = expand_in_annulus(f, AnnulusSpec(1))
        assert [near.coefficient(n) for n in range(5)] == [1, 2, 3, 4, 5]
        assert [far.coefficient(n) for n in (-1, -2, -3, -4)] == [0, 1, 2, 3]

    def test_polynomial_part(self):
        # z^3 / (z - 1) = z^2 + z + 1 + 1/(z-1)
        f = FactoredRational.build({3: 1}, [(1, 1)])
        far = expand_in_annulus(f, AnnulusSpec(1))
        assert [far.coefficient(n) for n in (2, 1, 0, -1, -2)] == [1, 1, 1, 1, 1]
        assert far.coefficient(3) == 0


@pytest.fixture
def random_factored(rng, random_terms, random_rational):
    """Random factored rationals with poles of distinct moduli."""
    def make() -> FactoredRational:
        sizes = rng.sample(MAGNITUDES, rng.randint(1, 4))
        poles = [(size * rng.choice((1, -1)), rng.randint(1, 3)) for size in sizes]
        return FactoredRational.build(
            random_terms(-2, 3), poles, shift=rng.randint(-2, 2), scale=random_rational(nonzero=True)
        )
    return make


def pole_free_regions(f: FactoredRational):
    """(inner, outer) for every gap between consecutive pole moduli, 0 and infinity included."""
    sizes = sorted(abs(root) for root, _ in f.poles)
    bounds = [Fraction(0)] + sizes
    return [(lo, sizes[i] if i < len(sizes) else None) for i, lo in enumerate(bounds)]


def denominator_coefficients(f: FactoredRational):
    coeffs = [Fraction(1)]
    for root, multiplicity in f.poles:
        for _ in range(multiplicity):
            shifted = [Fraction(0)] + coeffs
            coeffs = [s - root * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
    return coeffs


class TestRandomRationals:
    def test_nested_annulus_gives_same_expansion(self, rng, random_factored):
        for _ in range(100):
            f = random_factored()
            lo, hi = rng.choice(pole_free_regions(f))
            if hi is None:
                nested = AnnulusSpec(lo + 1, lo + 2)
            else:
                nested = AnnulusSpec((2 * lo + hi) / 3, (lo + 2 * hi) / 3)
            wide = expansion_window(expand_in_annulus(f, AnnulusSpec(lo, hi)), -12, 12)
            assert expansion_window(expand_in_annulus(f, nested), -12, 12) == wide

    def test_multiplying_back_recovers_numerator(self, random_factored):
        # D(z) * expansion = scale * z^shift * N(z), coefficientwise in every region
        for _ in range(100):
            f = random_factored()
            denominator = denominator_coefficients(f)
            numerator = dict(f.numerator)
            for lo, hi in pole_free_regions(f):
                e = expand_in_annulus(f, AnnulusSpec(lo, hi))
                for n in range(-12, 13):
                    product = sum(
                        (d * e.coefficient(n - j) for j, d in enumerate(denominator)),
                        Fraction(0),
                    )
                    assert product == f.scale * numerator.get(n - f.shift, 0)


class TestValidation:
    def test_pole_inside(self):
        with pytest.raises(PoleInAnnulus):
            expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(1, 3))

    def test_boundary_poles_accepted(self):
        inner = expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(2, 5))
        outer = expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(1, 2))
        assert annulus_classification(inner)[0]["side"] == INSIDE
        assert annulus_classification(outer)[0]["side"] == OUTSIDE

    @pytest.mark.parametrize("inner,outer", [(2, 2), (3, 1), (-1, 2)])
    def test_invalid_annulus(self, inner, outer):
        with pytest.raises(InvalidAnnulus):
            AnnulusSpec(inner, outer)

    @pytest.mark.parametrize("poles,scale", [
        ([(0, 1)], 1),
        ([(2, 0)], 1),
        ([(2, 1), (2, 2)], 1),
        ([(2, 1)], 0),
    ])
    def test_invalid_factored_form(self, poles, scale):
        with pytest.raises(InvalidArgument):
            FactoredRational.build({0: 1}, poles, scale=scale)

    def test_zero_numerator(self):
        f = FactoredRational.build({0: 0}, [(2, 1)])
        e = expand_in_annulus(f, AnnulusSpec(0, 2))
        assert all(c == 0 for c in expansion_window(e, -3, 3).values())

    def test_empty_window(self):
        e = expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(0, 2))
        with pytest.raises(InvalidArgument):
            expansion_window(e, 2, 1)


class TestParsingAndReports:
    def test_parse_poles(self):
        assert parse_poles("1/2^2, 3") == [(HALF, 2), (3, 1)]

    @pytest.mark.parametrize("text", ["", "2^x", " , "])
    def test_parse_poles_rejects(self, text):
        with pytest.raises(InvalidArgument):
            parse_poles(text)

    def test_parse_radius(self):
        assert parse_radius("inf") is None
        assert parse_radius("3/2") == Fraction(3, 2)

    def test_window_report(self):
        e = expand_in_annulus(ONE_OVER_TWO_MINUS_Z, AnnulusSpec(0, 2))
        report = window_report(e, 0, 2)
        assert report.annulus == "0 < |z| < 2"
        assert report.coefficients[0] == ("1", "2")
        assert report.coefficients[2] == ("1", "8")
        assert report.poles == [{"root": "2", "multiplicity": "1", "side": OUTSIDE}]
