"""Usage guide resource - how to ask for coefficients without falling into unsafe brackets."""


def get_usage_guide_impl() -> str:
    """Implementation for the usage guide resource."""
    return """# Bracket Series Usage Guide

Every value this server returns is an exact rational. Series are truncated:
a result `... + O(z^17)` means every coefficient up to z^16 is known exactly
and nothing beyond it is claimed.

---

## THE SAFETY DISCIPLINE

`[F(z)] G(z)` is the sum of f_n g_n over all n. That sum is finite when
G is expanded in ascending powers (an L-series, finitely many negative
powers) and F in descending powers (an R-series, finitely many positive
powers). Reading both in the same direction is how the classic paradox
arises:

    [1/(1-z)] 1 = 1  if 1/(1-z) = 1 + z + z^2 + ...
    [1/(1-z)] 1 = 0  if 1/(1-z) = -z^(-1) - z^(-2) - ...

**Rule:** the `f_expression` of `evaluate_bracket` is expanded in powers
of 1/z. Write every sum that sits in a denominator with its highest
power first:

| Write | Not | Meaning |
|-------|-----|---------|
| `z^2/(z-1)` | `-z^2/(1-z)` | leftward sum `z + 1 + z^(-1) + ...` |
| `1/(z-2)` | `-1/(2-z)` | `z^(-1) + 2 z^(-2) + ...` |

`evaluate_bracket("1/(1-z)", "1")` is refused with `UnsafeBracket`.

**Leftward sums:** `[z^n/(z-1)] G = g_(n-1) + g_(n-2) + ...`, which
is finite for every L-series G.

**The lucky rightward sum:** `z^n/(1-z)` expanded upward sums
`g_n + g_(n+1) + ...`. For a polynomial G this is finite and the
answer agrees with the annulus `1 < |z|` reading. Use
`expand_rational` to see both readings of `-z/(1-z)`:
the constant term is 0 in `0 < |z| < 1` and 1 in `1 < |z|`.

---

## TOOLS

### Univariate series
- `expand_series(expression, order)`: truncated expansion, text and JSON
- `series_coefficient(expression, n, order)`: one coefficient
- `evaluate_bracket(f_expression, g_expression, order)`: `[F] G`
- `revert_series(expression, order)`: compositional inverse of a series with valuation 1

### Rational functions in an annulus
- `expand_rational(numerator, poles, shift, inner, outer, start, stop, scale)`
  - `poles` is `"r1^m1,r2^m2"`, e.g. `"2"` or `"1/2^2,3"`
  - the function is `scale * z^shift * numerator / prod((z - r)^m)`
  - `outer="inf"` means no outer boundary
  - a pole on a boundary circle is accepted; one strictly inside is an error

### Identities
- `check_identity(name, max_value)`: `saalschutz`, `dixon`, `gessel-stanton` on a parameter grid
- `get_identity_catalog(family, search_keyword)`: what the engine implements and where

### Coupons
- `coupon_expectation(probabilities, n, method)`: expected trials to see n distinct coupons
  - `probabilities` is `"1/3,1/3,1/3"`; they must sum to 1
  - `method` is `formula`, `bracket`, `oracle` or `all`

---

## COMMAND LINE

The same operations are available as `bracket-series` subcommands:

    bracket-series series "1/(2-z)" --order 6
    bracket-series coeff "exp(z/(1-z))" --n 4
    bracket-series bracket --f "z^2/(z-1)" --g "1+z+z^2"
    bracket-series revert "z-z^2" --order 6
    bracket-series expand-rational --num -1 --poles 2 --inner 2 --outer inf --from -4 --to 0
    bracket-series identity dixon --max 3
    bracket-series identity --list
    bracket-series coupon --probs 1/3,1/3,1/3 --n 3

Add `--json` before the subcommand for machine-readable output.
Exit code 2 means the input did not parse; 1 means a domain error.

---

## ERRORS

Failures come back as `{"error": <kind>, "message": ..., "help": ...}`.

- `InsufficientPrecision`: raise `order`; quotients by series with
  a high valuation consume precision
- `CompositionValuationError`: `exp` and `log` need an argument
  whose expansion starts at z^1 (for `log`, at 1 + z^1)
- `PoleInAnnulus`: pick radii so every pole is on or outside the boundaries

## CONFIGURATION

| Variable | Default |
|----------|---------|
| `BRACKET_DEFAULT_ORDER` | 16 |
| `BRACKET_PRECISION_SLACK` | 8 |
| `BRACKET_MAX_PRECISION_RETRIES` | 6 |
| `BRACKET_LOG_LEVEL` | WARNING |
"""
