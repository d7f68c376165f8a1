"""Identity-grid checks and the identity catalog tool."""

import itertools
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from identity_catalog import (
    IDENTITY_CATALOG,
    IDENTITY_FAMILIES,
    get_identities_by_family,
    search_identities,
)
from series.errors import BracketSeriesError, InvalidArgument
from series.multivar import dixon, gessel_stanton_dixon, gessel_stanton_saalschutz, saalschutz
from tools.responses import error_response

logger = logging.getLogger(__name__)

GRID_IDENTITIES = ("saalschutz", "dixon", "gessel-stanton")
MAX_GRID_VALUE = 8


class IdentityReport(BaseModel):
    """JSON output of an identity-grid check."""

    identity: str
    max: int
    checked: int
    failures: List[Tuple[int, ...]] = Field(
        default_factory=list,
        description="parameter tuples where the routes disagree",
    )


def _saalschutz_grid(top: int) -> Tuple[int, List[Tuple[int, ...]]]:
    failures = []
    points = list(itertools.product(range(top + 1), repeat=4))
    for point in points:
        if not saalschutz(*point).equal:
            failures.append(point)
    return len(points), failures


def _dixon_grid(top: int) -> Tuple[int, List[Tuple[int, ...]]]:
    failures = []
    points = list(itertools.product(range(top + 1), repeat=3))
    for point in points:
        if not dixon(*point).all_equal:
            failures.append(point)
    return len(points), failures


def _gessel_stanton_grid(top: int) -> Tuple[int, List[Tuple[int, ...]]]:
    """
    Both specializations of the transformation plus the F = G = 1 base case.

    Saalschutz points are tagged (0, k, l, m, n), Dixon points (1, l, m, n),
    the base case (2,). Each family shares one box so expansions are reused.
    """
    failures: List[Tuple[int, ...]] = []
    checked = 0
    for k, l, m, n in itertools.product(range(top + 1), repeat=4):
        check = gessel_stanton_saalschutz(k, l, m, n, box=(top, top))
        checked += 1
        if not check.equal or check.lhs != saalschutz(k, l, m, n).product_side:
            failures.append((0, k, l, m, n))
    for l, m, n in itertools.product(range(top + 1), repeat=3):
        check = gessel_stanton_dixon(l, m, n, box=(2 * top, 2 * top))
        checked += 1
        if not check.equal or check.lhs != dixon(l, m, n).closed_form:
            failures.append((1, l, m, n))
    base = gessel_stanton_saalschutz(0, 0, 0, 0)
    checked += 1
    if not (base.equal and base.lhs == 1):
        failures.append((2,))
    return checked, failures


_GRIDS: Dict[str, Callable[[int], Tuple[int, List[Tuple[int, ...]]]]] = {
    "saalschutz": _saalschutz_grid,
    "dixon": _dixon_grid,
    "gessel-stanton": _gessel_stanton_grid,
}


def check_identity_impl(name: str, max_value: int = 3) -> Dict[str, Any]:
    """Implementation for checking an identity on every point of [0, max_value]^d."""
    try:
        if name not in _GRIDS:
            raise InvalidArgument(f"unknown identity {name!r}; choose from {', '.join(GRID_IDENTITIES)}")
        if not 0 <= max_value <= MAX_GRID_VALUE:
            raise InvalidArgument(f"max must lie in 0..{MAX_GRID_VALUE}, got {max_value}")
        checked, failures = _GRIDS[name](max_value)
    except BracketSeriesError as e:
        return error_response(e)
    logger.debug("%s: checked %d points, %d failures", name, checked, len(failures))
    return IdentityReport(
        identity=name,
        max=max_value,
        checked=checked,
        failures=failures,
    ).model_dump(mode="json")


def get_identity_catalog_impl(
    family: Optional[str] = None,
    search_keyword: Optional[str] = None
) -> Dict[str, Any]:
    """Implementation for retrieving identity catalog entries."""
    if search_keyword:
        identities = search_identities(search_keyword)
        return {
            "search_keyword": search_keyword,
            "count": len(identities),
            "identities": identities
        }
    elif family:
        identities = get_identities_by_family(family)
        return {
            "family": family,
            "description": IDENTITY_FAMILIES.get(family.lower(), ""),
            "count": len(identities),
            "identities": identities
        }
    else:
        return {
            "families": IDENTITY_FAMILIES,
            "count": len(IDENTITY_CATALOG),
            "identities": IDENTITY_CATALOG
        }
