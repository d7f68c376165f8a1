"""Tests for the tool implementations and their error dictionaries."""

from series.errors import ParseError, UnsafeBracket
from tools.annulus_tools import expand_rational_impl
from tools.coupon_tools import coupon_expectation_impl
from tools.identity_tools import check_identity_impl, get_identity_catalog_impl
from tools.responses import error_response, is_error
from tools.series_tools import (
    evaluate_bracket_impl,
    expand_series_impl,
    revert_series_impl,
    series_coefficient_impl,
)


def coefficients(result):
    return {int(n): tuple(pair) for n, pair in result["coefficients"].items()}


class TestResponses:
    def test_shape(self):
        response = error_response(UnsafeBracket("bad denominator"))
        assert response["error"] == "UnsafeBracket"
        assert response["message"] == "bad denominator"
        assert "z-1" in response["help"]
        assert is_error(response)

    def test_parse_error_details(self):
        response = error_response(ParseError("unexpected end of input", 3, ["integer"]))
        assert response["position"] == 3
        assert response["expected"] == ["integer"]

    def test_success_is_not_error(self):
        assert not is_error({"value": [1, 1]})


class TestSeriesTools:
    def test_expand(self):
        result = expand_series_impl("1/(2-z)", 3)
        assert result["text"] == "1/2 + 1/4 z + 1/8 z^2 + 1/16 z^3 + O(z^4)"
        assert result["series"]["valuation"] == 0
        assert result["series"]["coefficients"][0] == ["1", "2"]

    def test_expand_parse_error(self):
        result = expand_series_impl("z^-", 3)
        assert result["error"] == "ParseError"
        assert result["position"] == 3

    def test_coefficient(self):
        result = series_coefficient_impl("(1+z)^5", 2)
        assert result["coefficient"] == [10, 1]
        assert result["text"] == "10"

    def test_coefficient_raises_order(self):
        result = series_coefficient_impl("1/(1-z)", 20, order=5)
        assert result["coefficient"] == [1, 1]

    def test_bracket(self):
        assert evaluate_bracket_impl("z^2", "(1+z)^5")["value"] == [10, 1]
        assert evaluate_bracket_impl("z^2/(z-1)", "1+z+z^2")["value"] == [2, 1]

    def test_unsafe_bracket(self):
        result = evaluate_bracket_impl("1/(1-z)", "1")
        assert result["error"] == "UnsafeBracket"

    def test_revert(self):
        result = revert_series_impl("z-z^2", 5)
        assert result["series"]["valuation"] == 1
        assert [int(num) for num, _ in result["series"]["coefficients"]] == [1, 1, 2, 5, 14]

    def test_revert_needs_valuation_one(self):
        assert revert_series_impl("1+z", 4)["error"] == "CompositionValuationError"


class TestAnnulusTool:
    def test_inside_disc(self):
        result = expand_rational_impl("-1", "2", outer="2", start=0, stop=3)
        assert result["annulus"] == "0 < |z| < 2"
        assert coefficients(result) == {0: ("1", "2"), 1: ("1", "4"), 2: ("1", "8"), 3: ("1", "16")}
        assert result["poles"] == [{"root": "2", "multiplicity": "1", "side": "outside"}]

    def test_sides_of_the_unit_circle(self):
        inside = expand_rational_impl("z", "1", outer="1", start=0, stop=0)
        outside = expand_rational_impl("z", "1", inner="1", start=0, stop=0)
        assert coefficients(inside)[0] == ("0", "1")
        assert coefficients(outside)[0] == ("1", "1")

    def test_two_poles(self):
        result = expand_rational_impl("1/2 z^2 - 2z + 1/2", "2,1/2", inner="1/2", outer="2", start=-2, stop=2)
        assert [coefficients(result)[n] for n in range(-2, 3)] == [
            ("1", "8"), ("1", "4"), ("1", "1"), ("1", "4"), ("1", "8")
        ]

    def test_polynomial_without_poles(self):
        result = expand_rational_impl("z^2 + 1", "", start=0, stop=3)
        assert coefficients(result) == {0: ("1", "1"), 1: ("0", "1"), 2: ("1", "1"), 3: ("0", "1")}

    def test_pole_in_annulus(self):
        assert expand_rational_impl("1", "2", inner="1", outer="3")["error"] == "PoleInAnnulus"

    def test_numerator_must_be_polynomial(self):
        assert expand_rational_impl("1/(1-z)", "2")["error"] == "InvalidArgument"

    def test_bad_radius(self):
        assert expand_rational_impl("1", "2", inner="3", outer="1")["error"] == "InvalidAnnulus"


class TestIdentityTools:
    def test_dixon_grid(self):
        result = check_identity_impl("dixon", 2)
        assert result == {"identity": "dixon", "max": 2, "checked": 27, "failures": []}

    def test_saalschutz_grid(self):
        result = check_identity_impl("saalschutz", 2)
        assert result["checked"] == 81
        assert result["failures"] == []

    def test_gessel_stanton_grid(self):
        result = check_identity_impl("gessel-stanton", 1)
        assert result["checked"] == 16 + 8 + 1
        assert result["failures"] == []

    def test_unknown_identity(self):
        assert check_identity_impl("pfaff", 2)["error"] == "InvalidArgument"

    def test_max_out_of_range(self):
        assert check_identity_impl("dixon", 9)["error"] == "InvalidArgument"

    def test_catalog(self):
        result = get_identity_catalog_impl()
        assert result["count"] == len(result["identities"])
        assert "bracket" in result["families"]

    def test_catalog_by_family(self):
        result = get_identity_catalog_impl(family="inversion")
        assert set(result["identities"]) == {"composition", "lagrange", "power-expansion", "theta-constant-term"}
        assert result["description"]

    def test_catalog_search(self):
        result = get_identity_catalog_impl(search_keyword="Dixon")
        assert "dixon" in result["identities"]


class TestCouponTool:
    def test_all_methods(self):
        result = coupon_expectation_impl("1/3,1/3,1/3", 3)
        assert result["expected"] == [11, 2]
        assert result["methods_agree"] is True
        assert set(result["methods"]) == {"formula", "bracket", "oracle"}

    def test_single_method(self):
        result = coupon_expectation_impl("2/3,1/3", 2, method="oracle")
        assert result["methods"] == {"oracle": [7, 2]}

    def test_probabilities_must_sum_to_one(self):
        assert coupon_expectation_impl("1/2,1/4", 1)["error"] == "InvalidArgument"

    def test_target_too_large(self):
        assert coupon_expectation_impl("1/2,1/2", 3)["error"] == "InvalidArgument"
