"""Tests for bivariate series and the identities built on them."""

import itertools
import math
from fractions import Fraction

import pytest

from series.bracket import bracket
from series.errors import (
    CompositionValuationError,
    DivisionByZeroSeries,
    InsufficientPrecision,
    InvalidArgument,
    VariableMismatch,
)
from series.laurent import RSeries, coefficient_at, make_series, mul, power
from series.multivar import (
    BiSeries,
    bi_add,
    bi_bracket,
    bi_compose,
    bi_div_unit,
    bi_exp,
    bi_mul,
    bi_power,
    dixon,
    gessel_stanton_check,
    gessel_stanton_dixon,
    gessel_stanton_saalschutz,
    monomial_substitute,
    partial_bracket,
    random_graph_coeff,
    random_graph_coeff_bivariate,
    saalschutz,
    shifted_diagonal_check,
)


@pytest.fixture
def random_bipoly(rng, random_rational):
    def make(size: int = 4, span: int = 2) -> BiSeries:
        terms = {
            (rng.randint(-span, span), rng.randint(-span, span)): random_rational(nonzero=True)
            for _ in range(size)
        }
        return BiSeries.polynomial(terms)
    return make


class TestBiSeries:
    def test_polynomial_window(self):
        g = BiSeries.polynomial({(-1, 2): 3, (2, 0): 1})
        assert (g.min_w, g.min_z) == (-1, 0)
        assert g.is_exact()
        assert g.coefficient(-1, 2) == 3
        assert g.coefficient(5, 5) == 0

    def test_outside_known_window(self):
        g = BiSeries(("w", "z"), {(0, 0): 1}, 0, 2, 0, 2)
        with pytest.raises(InsufficientPrecision):
            g.coefficient(3, 0)

    def test_support_outside_window_rejected(self):
        with pytest.raises(InvalidArgument):
            BiSeries(("w", "z"), {(3, 0): 1}, 0, 2, 0, 2)

    def test_from_lseries(self):
        g = BiSeries.from_lseries(make_series("t", {0: 1, 1: 2}, 3), direction=(1, 1))
        assert g.coefficient(1, 1) == 2
        assert (g.max_w, g.max_z) == (3, 3)

    def test_from_lseries_bad_direction(self):
        with pytest.raises(InvalidArgument):
            BiSeries.from_lseries(make_series("t", {0: 1}, 3), direction=(0, 0))

    def test_variable_mismatch(self):
        with pytest.raises(VariableMismatch):
            bi_add(BiSeries.constant(1), BiSeries.constant(1, variables=("x", "y")))


class TestArithmetic:
    def test_product_of_binomials(self):
        g = BiSeries.polynomial({(0, 0): 1, (1, 0): 1}) * BiSeries.polynomial({(0, 0): 1, (0, 1): 1})
        assert g.support == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}

    def test_trinomial_power(self):
        g = bi_power(BiSeries.polynomial({(0, 0): 1, (1, 0): 1, (0, 1): 1}), 3)
        assert g.coefficient(1, 1) == 6
        assert g.coefficient(2, 1) == 3

    def test_negative_power(self):
        with pytest.raises(InvalidArgument):
            bi_power(BiSeries.constant(2), -1)

    def test_mul_window(self):
        a = BiSeries(("w", "z"), {(0, 0): 1, (1, 0): 1}, 0, 3, 0, 2)
        b = BiSeries.monomial(2, 1)
        assert (bi_mul(a, b).max_w, bi_mul(a, b).max_z) == (5, 3)

    def test_subtraction_cancels(self, random_bipoly):
        g = random_bipoly()
        assert (g - g).support == {}


class TestDivision:
    def test_power_of_inner_series(self):
        # [w^m z^n] 1/(1 - w(1+z)) = [z^n] (1+z)^m
        divisor = BiSeries.polynomial({(0, 0): 1, (1, 0): -1, (1, 1): -1})
        q = bi_div_unit(BiSeries.constant(1), divisor, box=(4, 4))
        for m in range(5):
            for n in range(5):
                expected = coefficient_at(power(make_series("z", {0: 1, 1: 1}, 8), m), n)
                assert q.coefficient(m, n) == expected

    def test_power_of_random_inner_series(self, random_terms):
        # [w^m z^n] 1/(1 - w F(z)) = [z^n] F^m
        for _ in range(100):
            f_terms = random_terms(0, 3)
            divisor = BiSeries.polynomial({(0, 0): 1, **{(1, e): -c for e, c in f_terms.items()}})
            q = bi_div_unit(BiSeries.constant(1), divisor, box=(4, 6))
            f = make_series("z", f_terms, 8)
            for m in range(5):
                f_m = power(f, m)
                for n in range(7):
                    assert q.coefficient(m, n) == coefficient_at(f_m, n)

    def test_division_inverts_product(self):
        b = BiSeries.polynomial({(0, 0): 2, (1, 0): -1, (0, 1): 3})
        a = BiSeries.polynomial({(0, 0): 1, (1, 2): 5})
        q = bi_div_unit(a * b, b, box=(3, 3))
        assert q.support == a.support

    def test_constant_divisor_exact(self):
        q = bi_div_unit(BiSeries.monomial(1, 1, 3), BiSeries.constant(3))
        assert q.support == {(1, 1): 1}
        assert q.is_exact()

    def test_infinite_quotient_needs_box(self):
        with pytest.raises(InsufficientPrecision):
            bi_div_unit(BiSeries.constant(1), BiSeries.polynomial({(0, 0): 1, (1, 1): -1}))

    def test_zero_constant_term(self):
        with pytest.raises(DivisionByZeroSeries):
            bi_div_unit(BiSeries.constant(1), BiSeries.monomial(1, 0), box=(2, 2))


class TestBrackets:
    def test_exponential_coefficients(self):
        # [w^m z^n] e^(w F(z)) = [z^n] F^m / m! with F = z + z^2
        a = BiSeries.polynomial({(1, 1): 1, (1, 2): 1})
        g = bi_exp(a, box=(2, 4))
        assert g.coefficient(2, 3) == 1
        assert g.coefficient(2, 4) == Fraction(1, 2)
        assert g.coefficient(1, 2) == 1

    def test_random_exponential_coefficients(self, random_terms):
        # [w^m z^n] e^(w F(z)) = [z^n] F^m / m!
        for _ in range(100):
            f_terms = random_terms(0, 3)
            g = bi_exp(BiSeries.polynomial({(1, e): c for e, c in f_terms.items()}), box=(4, 6))
            f = make_series("z", f_terms, 8)
            for m in range(5):
                f_m = power(f, m)
                for n in range(7):
                    assert g.coefficient(m, n) == coefficient_at(f_m, n) / math.factorial(m)

    def test_composition_with_outer_factor(self, random_terms):
        # [w^m z^n] G(w F(z)) H(z) = G_m [z^n] F^m H
        for _ in range(100):
            f_terms = random_terms(0, 3)
            outer = make_series("u", random_terms(0, 5), 10)
            h = make_series("z", random_terms(0, 4), 8)
            inner = BiSeries.polynomial({(1, e): c for e, c in f_terms.items()})
            g = bi_mul(bi_compose(outer, inner, box=(4, 6)), BiSeries.from_lseries(h, (0, 1)))
            f = make_series("z", f_terms, 8)
            for m in range(5):
                f_m_h = mul(power(f, m), h)
                for n in range(7):
                    assert g.coefficient(m, n) == coefficient_at(outer, m) * coefficient_at(f_m_h, n)

    def test_exp_needs_zero_constant(self):
        with pytest.raises(CompositionValuationError):
            bi_exp(BiSeries.polynomial({(0, 0): 1, (1, 0): 1}), box=(2, 2))

    def test_subscripted_bracket(self):
        g = bi_power(BiSeries.polynomial({(0, 0): 1, (1, 0): 1}), 2) * bi_power(
            BiSeries.polynomial({(0, 0): 1, (0, 1): 1}), 3
        )
        inner = partial_bracket({1: 1}, g, "w")
        assert inner.variable == "z"
        assert inner.terms() == {0: 2, 1: 6, 2: 6, 3: 2}
        assert bi_bracket(BiSeries.monomial(1, 2), g) == coefficient_at(inner, 2)

    def test_random_subscripted_bracket(self, random_terms, random_bipoly):
        # [F(w) H(z)] G = [H(z)] ([F(w)]_w G)
        for _ in range(100):
            f_terms, h_terms = random_terms(-2, 2), random_terms(-2, 2)
            g = random_bipoly()
            product = BiSeries.polynomial(
                {(p, q): a * b for p, a in f_terms.items() for q, b in h_terms.items()}
            )
            inner = partial_bracket(f_terms, g, "w", order=2)
            assert bi_bracket(product, g) == bracket(RSeries.from_terms("z", h_terms, -2), inner)

    def test_partial_bracket_unknown_variable(self):
        with pytest.raises(VariableMismatch):
            partial_bracket({0: 1}, BiSeries.constant(1), "x")

    def test_bracket_needs_polynomial_argument(self):
        approx = BiSeries(("w", "z"), {(0, 0): 1}, 0, 2, 0, 2)
        with pytest.raises(InvalidArgument):
            bi_bracket(approx, BiSeries.constant(1))

    def test_monomial_substitution_preserves_bracket(self, random_bipoly):
        for matrix, scales in [((1, 0, 0, 1), (2, 3)), ((2, 1, 1, 1), (1, -1)), ((1, 2, 0, -1), (Fraction(1, 2), 5))]:
            a, b = (Fraction(s) for s in scales)
            for _ in range(20):
                f, g = random_bipoly(), random_bipoly()
                moved_f = monomial_substitute(f, matrix, (1 / a, 1 / b))
                moved_g = monomial_substitute(g, matrix, (a, b))
                assert bi_bracket(moved_f, moved_g) == bi_bracket(f, g)

    @pytest.mark.parametrize("matrix,scales", [
        ((1, 0, 0, 1), (2, 1)),
        ((1, 0, 0, 1), (-1, 1)),
        ((1, 0, 0, 1), (Fraction(1, 3), 1)),
        ((-2, 0, 0, 1), (1, 1)),
        ((-1, 0, 0, 1), (1, 1)),
        ((2, 0, 0, 1), (1, 1)),
        ((3, 0, 0, 1), (1, 1)),
        ((1, 0, -1, 1), (1, 1)),
        ((1, 0, 2, 1), (1, 1)),
        ((1, 0, 3, 1), (1, 1)),
    ])
    def test_substitution_family_preserves_bracket(self, random_bipoly, matrix, scales):
        # w -> a w, w -> w^m and z -> w^m z
        a, b = (Fraction(s) for s in scales)
        for _ in range(100):
            f, g = random_bipoly(), random_bipoly()
            moved_f = monomial_substitute(f, matrix, (1 / a, 1 / b))
            moved_g = monomial_substitute(g, matrix, (a, b))
            assert bi_bracket(moved_f, moved_g) == bi_bracket(f, g)

    def test_random_substitution_preserves_bracket(self, rng, random_rational, random_bipoly):
        for _ in range(100):
            while True:
                matrix = tuple(rng.randint(-2, 2) for _ in range(4))
                if matrix[0] * matrix[3] - matrix[1] * matrix[2]:
                    break
            a, b = random_rational(nonzero=True), random_rational(nonzero=True)
            f, g = random_bipoly(), random_bipoly()
            moved_f = monomial_substitute(f, matrix, (1 / a, 1 / b))
            moved_g = monomial_substitute(g, matrix, (a, b))
            assert bi_bracket(moved_f, moved_g) == bi_bracket(f, g)

    def test_singular_substitution(self):
        with pytest.raises(InvalidArgument):
            monomial_substitute(BiSeries.constant(1), (1, 2, 2, 4))

    def test_framed_coefficients(self):
        g = BiSeries.from_lseries(power(make_series("z", {0: 1, 1: 1}, 4), 4), direction=(0, 1))
        moved = monomial_substitute(g, (1, 1, 0, 1))
        assert moved.coefficient(0, 2) == 6
        assert moved.coefficient(1, 0) == 0
        with pytest.raises(InsufficientPrecision):
            moved.coefficient(0, 5)
        with pytest.raises(InvalidArgument):
            bi_add(moved, moved)


class TestClassicalIdentities:
    def test_saalschutz_point(self):
        result = saalschutz(1, 1, 1, 1)
        assert result.sum_side == result.middle_side == result.product_side == 4
        assert result.equal

    @pytest.mark.parametrize("l,m,n,expected", [(1, 1, 1, -6), (2, 1, 1, -12), (0, 0, 0, 1), (1, 2, 1, 12)])
    def test_dixon(self, l, m, n, expected):
        result = dixon(l, m, n)
        assert result.closed_form == expected
        assert result.all_equal

    def test_saalschutz_grid(self):
        assert all(saalschutz(*point).equal for point in itertools.product(range(7), repeat=4))

    def test_dixon_grid(self):
        assert all(dixon(*point).all_equal for point in itertools.product(range(6), repeat=3))

    def test_negative_parameters(self):
        with pytest.raises(InvalidArgument):
            saalschutz(-1, 0, 0, 0)
        with pytest.raises(InvalidArgument):
            dixon(0, -1, 0)

    def test_gessel_stanton_base_case(self):
        check = gessel_stanton_saalschutz(0, 0, 0, 0)
        assert check.lhs == check.rhs == 1

    def test_gessel_stanton_gives_saalschutz(self):
        for point in [(1, 1, 1, 1), (2, 1, 0, 3), (0, 2, 2, 1)]:
            check = gessel_stanton_saalschutz(*point, box=(2, 2))
            assert check.equal
            assert check.lhs == saalschutz(*point).product_side

    def test_gessel_stanton_gives_dixon(self):
        for point in [(1, 1, 1), (2, 1, 1), (0, 1, 2)]:
            check = gessel_stanton_dixon(*point, box=(4, 4))
            assert check.equal
            assert check.lhs == dixon(*point).closed_form

    def test_gessel_stanton_general(self):
        check = gessel_stanton_check(2, 1, 1, 2, 1, 1)
        assert check.equal

    def test_gessel_stanton_small_box(self):
        with pytest.raises(InsufficientPrecision):
            gessel_stanton_check(2, 2, 0, 0, 0, 0, box=(1, 2))

    def test_shifted_diagonal(self):
        g = make_series("z", {1: 1, 2: -2, 3: 5, 5: 1}, 6)
        for a in (1, 2, Fraction(-1, 3)):
            check = shifted_diagonal_check({0: 1, 2: 3, 3: -1}, g, a)
            assert check.equal

    def test_random_shifted_diagonal(self, random_terms, random_rational):
        for _ in range(100):
            g = make_series("z", random_terms(1, 5), 5)
            check = shifted_diagonal_check(random_terms(0, 3), g, random_rational(nonzero=True))
            assert check.equal

    def test_shifted_diagonal_rejects(self):
        g = make_series("z", {1: 1}, 4)
        with pytest.raises(InvalidArgument):
            shifted_diagonal_check({1: 1}, g, 0)
        with pytest.raises(InvalidArgument):
            shifted_diagonal_check({1: 1}, make_series("z", {0: 1}, 4), 1)


class TestRandomGraph:
    @pytest.mark.parametrize("u,v,m,n,expected", [
        ({1: 1}, {}, 0, 3, Fraction(1, 6)),
        ({1: 1}, {1: 1}, 1, 2, 1),
        ({1: 1, 2: 1}, {}, 1, 3, 1),
    ])
    def test_known_values(self, u, v, m, n, expected):
        assert random_graph_coeff(make_series("z", u, 6), make_series("z", v, 6), m, n) == expected

    def test_below_diagonal(self):
        assert random_graph_coeff(make_series("z", {1: 1}, 6), make_series("z", {}, 6), 3, 2) == 0

    @pytest.mark.parametrize("u", [{}, {1: 1}, {1: 2, 2: -1}])
    def test_diagonal(self, u):
        # m = n leaves U^0 = 1, so the coefficient is [z^n] e^z for V = z
        v = make_series("z", {1: 1}, 3)
        assert random_graph_coeff(make_series("z", u, 3), v, 3, 3) == Fraction(1, 6)
        assert random_graph_coeff(make_series("z", u, 3), v, 2, 2) == Fraction(1, 2)

    def test_routes_agree(self):
        u = make_series("z", {1: 1, 2: 2}, 6)
        v = make_series("z", {1: 1, 3: -1}, 6)
        for m in range(4):
            for n in range(m, 4):
                assert random_graph_coeff_bivariate(u, v, m, n) == random_graph_coeff(u, v, m, n)

    def test_u_needs_zero_constant(self):
        with pytest.raises(InvalidArgument):
            random_graph_coeff(make_series("z", {0: 1}, 4), make_series("z", {}, 4), 0, 1)
