"""
General lower and upper bounds on the ordered critical chromatic number.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from ordtile.critical.statistics import colouring_statistics
from ordtile.datatypes.errors import UnsupportedInputError


@dataclass(frozen=True)
class ChiStarBounds:
    """
    Attributes
    ----------
    lower : Fraction
        max(h/l-, h/l-*, (r-1) + (r-1)/(h-1)); attained values are allowed.
    lower_strict : bool
        Whether `lower` itself is excluded. Always False for these bounds.
    strict_floor : int
        r - 1, which the value always exceeds strictly.
    upper : Fraction
        h/l+.
    evidence : dict
        "lower" and "upper" -> names of the bounds achieving each side.
    """

    lower: Fraction
    upper: Fraction
    strict_floor: int
    lower_strict: bool = False
    evidence: Dict[str, List[str]] = field(default_factory=dict)

    def contains(self, value):
        value = Fraction(value)
        if value <= self.strict_floor:
            return False
        if value < self.lower or (self.lower_strict and value == self.lower):
            return False
        return value <= self.upper


def chi_star_bounds(H, stats=None):
    """
    Returns
    -------
    ChiStarBounds
    """
    stats = stats or colouring_statistics(H)
    r, h = stats.r, H.h
    if r < 2:
        raise UnsupportedInputError("the critical chromatic number bounds need at least one edge")
    candidates = [
        ("counting_first", Fraction(h, stats.ell_minus)),
        ("counting_last", Fraction(h, stats.ell_minus_star)),
        ("strong_lower", (r - 1) + Fraction(r - 1, h - 1)),
    ]
    lower = max(value for _, value in candidates)
    lower_names = [name for name, value in candidates if value == lower] + ["part_count"]
    upper = Fraction(h, stats.ell_plus)
    return ChiStarBounds(lower=lower, upper=upper, strict_floor=r - 1,
                         evidence={"lower": lower_names, "upper": ["upper_construction"]})
