"""Lookup tables for the bracket identities the engine implements."""

from typing import Dict, List, Optional


IDENTITY_FAMILIES = {
    "bracket": "Laws of the univariate bracket operator",
    "multivariate": "Brackets in two variables and monomial substitution",
    "classical": "Binomial summation identities derived by bracket manipulation",
    "inversion": "Composition, reversion and Lagrange inversion",
    "annulus": "Region-dependent expansions of rational functions",
    "application": "Applications of leftward sums",
}


IDENTITY_CATALOG: Dict[str, Dict[str, str]] = {
    "commutative-law": {
        "family": "bracket",
        "statement": "[F] G = [G] F when F and G are both Laurent polynomials",
        "entry_point": "series.bracket.bracket",
    },
    "mirror-symmetry": {
        "family": "bracket",
        "statement": "[F(z)] G(z) = [G(1/z)] F(1/z)",
        "entry_point": "series.laurent.subst_power",
    },
    "factor-moving": {
        "family": "bracket",
        "statement": "[F(z)] G(z) H(z) = [F(z) G(1/z)] H(z)",
        "entry_point": "series.bracket.bracket",
    },
    "multiplication-law": {
        "family": "bracket",
        "statement": "[F1 F2] G1 G2 = sum_k ([F1 z^k] G1)([F2 z^-k] G2)",
        "entry_point": "series.bracket.multiplication_law",
    },
    "power-substitution": {
        "family": "bracket",
        "statement": "[F(z^m)] G(z^m) = [F(z)] G(z) for every nonzero integer m",
        "entry_point": "series.laurent.subst_power",
    },
    "scaling": {
        "family": "bracket",
        "statement": "[z^m] G(az) = a^m [z^m] G(z) for nonzero a",
        "entry_point": "series.laurent.scale_var",
    },
    "residue-of-derivative": {
        "family": "bracket",
        "statement": "[z^-1] G'(z) = 0",
        "entry_point": "series.laurent.derivative",
    },
    "theta-adjoint": {
        "family": "bracket",
        "statement": "[F] P(theta) G = [P(theta) F] G for every polynomial P",
        "entry_point": "series.laurent.theta",
    },
    "leftward-sum": {
        "family": "bracket",
        "statement": "[z^n/(z-1)] G = g_(n-1) + g_(n-2) + ...",
        "entry_point": "series.bracket.leftward_sum_bracket",
    },
    "subscripted-bracket": {
        "family": "multivariate",
        "statement": "[F(w) H(z)] G(w, z) = [H(z)] ([F(w)]_w G(w, z))",
        "entry_point": "series.multivar.partial_bracket",
    },
    "power-of-inner-series": {
        "family": "multivariate",
        "statement": "[w^m z^n] 1/(1 - wF(z)) = [z^n] F(z)^m",
        "entry_point": "series.multivar.bi_div_unit",
    },
    "exponential-coefficients": {
        "family": "multivariate",
        "statement": "[w^m z^n] e^(wF(z)) = [z^n] F(z)^m / m!",
        "entry_point": "series.multivar.bi_exp",
    },
    "monomial-substitution": {
        "family": "multivariate",
        "statement": "[F(w^k z^l / a, w^m z^n / b)] G(a w^k z^l, b w^m z^n) = [F] G when kn != lm",
        "entry_point": "series.multivar.monomial_substitute",
    },
    "random-graph": {
        "family": "multivariate",
        "statement": "[w^m z^n] e^(U(wz)/w + V(wz)) = [z^n] U^(n-m) e^V / (n-m)!",
        "entry_point": "series.multivar.random_graph_coeff",
    },
    "gessel-stanton": {
        "family": "classical",
        "statement": "[F] G/(1 - wz) = [F(w(1 + 1/z), z(1 + 1/w))] G(w/(1+z), z/(1+w))",
        "entry_point": "series.multivar.gessel_stanton_check",
    },
    "saalschutz": {
        "family": "classical",
        "statement": "sum_r C(m, k-r) C(n, l-r) C(m+n+r, r) = C(m+l, k) C(n+k, l)",
        "entry_point": "series.multivar.saalschutz",
    },
    "dixon": {
        "family": "classical",
        "statement": "sum_k (-1)^(k+m) C(l+m, k+m) C(m+n, k+n) C(n+l, k+l) = (-1)^m (l+m+n)!/(l! m! n!)",
        "entry_point": "series.multivar.dixon",
    },
    "shifted-diagonal": {
        "family": "classical",
        "statement": "[F(z)] G(z)/(1 - z) = [F(1 + az)] G(z/(a + z)) for nonzero a",
        "entry_point": "series.multivar.shifted_diagonal_check",
    },
    "composition": {
        "family": "inversion",
        "statement": "G(F(z)) = sum_n F(z)^n [z^n] G(z)",
        "entry_point": "series.laurent.compose",
    },
    "lagrange": {
        "family": "inversion",
        "statement": "n [z^n] g^m = m [z^-m] f^-n for the inverse g of f",
        "entry_point": "series.inversion.lagrange_coefficient",
    },
    "power-expansion": {
        "family": "inversion",
        "statement": "z^m = sum_k f(z)^k [z^k] g(z)^m",
        "entry_point": "series.inversion.paule_expansion",
    },
    "theta-constant-term": {
        "family": "inversion",
        "statement": "[1] f^(k-1-n) theta(f) = 0 for k != n, and [1] theta(f)/f = 1",
        "entry_point": "series.inversion.theta_power_constant_term",
    },
    "annulus-expansion": {
        "family": "annulus",
        "statement": "a rational function has one two-sided expansion per pole-free annulus",
        "entry_point": "series.annulus.expand_in_annulus",
    },
    "coupon-collector": {
        "family": "application",
        "statement": "E[trials] = integral over t >= 0 of [z^n/(z-1)] prod(1 + z(e^(p(c)t) - 1)) e^-t",
        "entry_point": "series.coupon.expected_trials_bracket",
    },
    "binomial-sum": {
        "family": "application",
        "statement": "sum_k C(m, k) [z^(n-k)] F^k = [z^n] (1 + zF)^m",
        "entry_point": "series.expression.eval_lseries",
    },
}


def get_identity(name: str) -> Optional[Dict[str, str]]:
    """Look up one identity by name."""
    return IDENTITY_CATALOG.get(name.lower())


def search_identities(keyword: str) -> Dict[str, Dict[str, str]]:
    """Search identities by keyword in name or statement."""
    keyword_lower = keyword.lower()
    return {
        name: entry
        for name, entry in IDENTITY_CATALOG.items()
        if keyword_lower in name or keyword_lower in entry["statement"].lower()
    }


def get_identities_by_family(family: str) -> Dict[str, Dict[str, str]]:
    """
    Get all identities in a family.

    Args:
        family: One of the keys of IDENTITY_FAMILIES

    Returns:
        Dictionary of identity names and entries in that family
    """
    return {
        name: entry
        for name, entry in IDENTITY_CATALOG.items()
        if entry["family"] == family.lower()
    }


def list_identity_names() -> List[str]:
    return sorted(IDENTITY_CATALOG)
