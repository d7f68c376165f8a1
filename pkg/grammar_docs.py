"""Structured documentation of the expression grammar and JSON wire formats."""

from typing import Dict, List


GRAMMAR = {
    "name": "expression",
    "description": "Series expressions in one variable (z or w). Whitespace is ignored.",
    "productions": [
        {"name": "expr", "rule": 'term (("+" | "-") term)*', "description": "Sums and differences"},
        {"name": "term", "rule": 'unary (("*" | "/")? unary)*', "description": "Products and quotients; juxtaposition multiplies, so 1/4 z^2 parses"},
        {"name": "unary", "rule": '("-" | "+") unary | factor', "description": "Unary minus binds looser than ^, so -z^2 is -(z^2)"},
        {"name": "factor", "rule": 'atom ("^" exponent)?', "description": "Integer powers only"},
        {"name": "exponent", "rule": '"(" signed-int ")" | signed-int', "description": "z^(-1) and z^-1 are accepted; z^- is not"},
        {"name": "atom", "rule": 'rational | variable | "(" expr ")" | func "(" expr ")"', "description": "Operands"},
        {"name": "func", "rule": '"exp" | "log" | "theta" | "D"', "description": "theta is z d/dz, D is d/dz"},
        {"name": "rational", "rule": 'int ("/" posint)?', "description": "Longest match: 3/4^2 is (3/4)^2"},
        {"name": "variable", "rule": '"z" | "w"', "description": "One variable per expression"},
    ],
    "examples": [
        {"text": "1/(2-z)", "meaning": "1/2 + 1/4 z + 1/8 z^2 + ..."},
        {"text": "exp(z/(1-z))", "meaning": "1 + z + 3/2 z^2 + 13/6 z^3 + 73/24 z^4 + ..."},
        {"text": "z^2/(z-1)", "meaning": "inside a bracket: the leftward sum z + 1 + z^(-1) + ..."},
    ],
}


WIRE_FORMATS = {
    "series": {
        "description": "A truncated series, as returned by expand_series and revert_series",
        "fields": [
            {"name": "variable", "type": "string", "description": "Series variable"},
            {"name": "valuation", "type": "int", "description": "Lowest exponent of the known window"},
            {"name": "order", "type": "int", "description": "Highest known exponent; the tail is O(z^(order+1))"},
            {"name": "coefficients", "type": "[[string, string], ...]", "description": "[numerator, denominator] from valuation to order"},
            {"name": "kind", "type": "string", "description": '"L" or "R"; R-series are stored as their mirror image'},
        ],
    },
    "coupon": {
        "description": "Result of coupon_expectation",
        "fields": [
            {"name": "expected", "type": "[int, int]", "description": "Expected number of trials as [numerator, denominator]"},
            {"name": "methods_agree", "type": "bool", "description": "Whether every method run gave the same value"},
            {"name": "methods", "type": "{string: [int, int]}", "description": "Value per method"},
        ],
    },
    "identity": {
        "description": "Result of check_identity",
        "fields": [
            {"name": "identity", "type": "string", "description": "saalschutz, dixon or gessel-stanton"},
            {"name": "checked", "type": "int", "description": "Number of parameter tuples checked"},
            {"name": "failures", "type": "[[int, ...], ...]", "description": "Parameter tuples where the routes disagree"},
        ],
    },
    "expansion": {
        "description": "Result of expand_rational",
        "fields": [
            {"name": "annulus", "type": "string", "description": "The region, e.g. 1/2 < |z| < 2"},
            {"name": "start", "type": "int", "description": "First exponent"},
            {"name": "stop", "type": "int", "description": "Last exponent"},
            {"name": "coefficients", "type": "{int: [string, string]}", "description": "Exponent to [numerator, denominator]"},
            {"name": "poles", "type": "[{root, multiplicity, side}]", "description": "Side of the annulus each pole falls on"},
        ],
    },
}


def get_grammar() -> Dict:
    """Get the expression grammar."""
    return GRAMMAR


def get_wire_format(name: str) -> Dict:
    """Get one JSON wire format by name."""
    return WIRE_FORMATS.get(name.lower(), {})


def get_production_names() -> List[str]:
    return [p["name"] for p in GRAMMAR["productions"]]
