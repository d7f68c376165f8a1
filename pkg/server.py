"""Bracket Series MCP Server - exact formal Laurent series and the coefficient-of operator."""

from typing import Any, Dict, Optional, Annotated, Literal
from dotenv import load_dotenv
from fastmcp import FastMCP
from pydantic import Field

from resources import (
    get_grammar_resource_impl,
    get_usage_guide_impl,
)
from tools.series_tools import (
    expand_series_impl,
    series_coefficient_impl,
    evaluate_bracket_impl,
    revert_series_impl,
)
from tools.annulus_tools import expand_rational_impl
from tools.identity_tools import (
    check_identity_impl,
    get_identity_catalog_impl,
)
from tools.coupon_tools import coupon_expectation_impl
from utils.settings import configure_logging

# Load environment variables
load_dotenv()

# Initialize FastMCP server
mcp = FastMCP("Bracket Series")


# ============================================================================
# RESOURCES
# ============================================================================

@mcp.resource("bracket://guide/usage")
def get_usage_guide_resource() -> str:
    """REQUIRED READING: which bracket arguments are safe, and how to call each tool."""
    return get_usage_guide_impl()


@mcp.resource("bracket://reference/grammar")
def get_grammar_resource() -> str:
    """Expression grammar and the JSON formats returned by the tools."""
    return get_grammar_resource_impl()


# ============================================================================
# SERIES TOOLS
# ============================================================================

@mcp.tool(tags=["series"])
def expand_series(
    expression: Annotated[str, Field(description='Series expression in z or w, e.g. "exp(z/(1-z))"')],
    order: Annotated[Optional[int], Field(description="Truncation order (default BRACKET_DEFAULT_ORDER)", ge=0)] = None
) -> Dict[str, Any]:
    """
    Expand an expression as a truncated Laurent series in ascending powers.

    Use this tool to see the coefficients of a generating function. The result lists every
    coefficient from the lowest power up to z^order exactly, as text and as JSON.
    """
    return expand_series_impl(expression, order)


@mcp.tool(tags=["series"])
def series_coefficient(
    expression: Annotated[str, Field(description="Series expression in z or w")],
    n: Annotated[int, Field(description="Exponent whose coefficient is wanted")],
    order: Annotated[Optional[int], Field(description="Working order; raised to n when smaller", ge=0)] = None
) -> Dict[str, Any]:
    """
    Extract the coefficient of z^n from an expression.
    """
    return series_coefficient_impl(expression, n, order)


@mcp.tool(tags=["series", "bracket"])
def evaluate_bracket(
    f_expression: Annotated[str, Field(description='Bracket argument F, read in powers of 1/z, e.g. "z^2/(z-1)"')],
    g_expression: Annotated[str, Field(description="Series G, read in powers of z")],
    order: Annotated[Optional[int], Field(description="Truncation order for G", ge=0)] = None
) -> Dict[str, Any]:
    """
    Evaluate the bracket [F(z)] G(z), the sum of f_n g_n over all n.

    Read bracket://guide/usage first: F must have finitely many positive powers when expanded
    in 1/z. Write denominator sums highest power first (z-1, not 1-z). Unsafe arguments are
    refused with UnsafeBracket rather than silently giving one of two conflicting answers.
    """
    return evaluate_bracket_impl(f_expression, g_expression, order)


@mcp.tool(tags=["series", "inversion"])
def revert_series(
    expression: Annotated[str, Field(description='Series with valuation 1, e.g. "z-z^2"')],
    order: Annotated[Optional[int], Field(description="Truncation order of the inverse", ge=1)] = None
) -> Dict[str, Any]:
    """
    Compute the compositional inverse g of f, so that f(g(z)) = z.

    Use this tool for Lagrange inversion problems: reverting z - z^2 gives the Catalan numbers,
    reverting z exp(-z) gives n^(n-1)/n!.
    """
    return revert_series_impl(expression, order)


# ============================================================================
# ANNULUS TOOLS
# ============================================================================

@mcp.tool(tags=["annulus"])
def expand_rational(
    numerator: Annotated[str, Field(description='Laurent polynomial numerator, e.g. "1" or "z^2-3"')],
    poles: Annotated[str, Field(description='Poles as "root^multiplicity" list, e.g. "2" or "1/2^2,3"')],
    shift: Annotated[int, Field(description="Extra factor z^shift")] = 0,
    inner: Annotated[str, Field(description="Inner radius as a rational")] = "0",
    outer: Annotated[str, Field(description='Outer radius as a rational, or "inf"')] = "inf",
    start: Annotated[int, Field(description="First exponent to report")] = -4,
    stop: Annotated[int, Field(description="Last exponent to report")] = 4,
    scale: Annotated[str, Field(description="Constant factor as a rational")] = "1"
) -> Dict[str, Any]:
    """
    Expand scale * z^shift * numerator / prod((z - r)^m) in the annulus inner < |z| < outer.

    A rational function has a different two-sided series in each pole-free annulus. Use this
    tool to compare them, e.g. 1/(2-z) is numerator "-1", poles "2": it has nonnegative powers
    only for outer <= 2 and negative powers only for inner >= 2.
    """
    return expand_rational_impl(numerator, poles, shift, inner, outer, start, stop, scale)


# ============================================================================
# IDENTITY TOOLS
# ============================================================================

@mcp.tool(tags=["identity"])
def check_identity(
    name: Annotated[Literal["saalschutz", "dixon", "gessel-stanton"], Field(description="Identity to check")],
    max_value: Annotated[int, Field(description="Check every parameter in 0..max_value", ge=0, le=8)] = 3
) -> Dict[str, Any]:
    """
    Check a binomial identity on a full parameter grid by independent routes.

    Saalschutz compares a direct sum, a bivariate expansion and a product of binomials. Dixon
    compares a bivariate coefficient, an alternating sum and a factorial closed form.
    Gessel-Stanton evaluates both sides of the bivariate bracket transformation for both
    specializations. Returns the number of points checked and any failing parameter tuples.
    """
    return check_identity_impl(name, max_value)


@mcp.tool(tags=["identity"])
def get_identity_catalog(
    family: Annotated[Optional[str], Field(description='Family filter, e.g. "bracket", "classical", "inversion"')] = None,
    search_keyword: Annotated[Optional[str], Field(description="Search names and statements by keyword")] = None
) -> Dict[str, Any]:
    """
    List the identities the engine implements, with statements and engine entry points.
    """
    return get_identity_catalog_impl(family, search_keyword)


# ============================================================================
# APPLICATION TOOLS
# ============================================================================

@mcp.tool(tags=["coupon"])
def coupon_expectation(
    probabilities: Annotated[str, Field(description='Comma-separated coupon probabilities summing to 1, e.g. "1/3,1/3,1/3"')],
    n: Annotated[int, Field(description="Number of distinct coupons wanted", ge=1)],
    method: Annotated[Literal["formula", "bracket", "oracle", "all"], Field(description="Route to compute by")] = "all"
) -> Dict[str, Any]:
    """
    Exact expected number of trials until n distinct coupons have been seen.

    The bracket route integrates a leftward sum of exponential polynomials; the formula route
    sums over coupon subsets; the oracle solves the subset Markov chain. With method "all"
    every route runs and methods_agree reports whether they match.
    """
    return coupon_expectation_impl(probabilities, n, method)


# ============================================================================
# Run the server
# ============================================================================

if __name__ == "__main__":
    configure_logging()
    mcp.run()
