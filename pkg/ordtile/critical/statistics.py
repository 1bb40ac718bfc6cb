"""
Colouring statistics of a pattern: the extremal class sizes over its proper
interval r-colourings and the independent prefix and suffix lengths.
"""

from dataclasses import dataclass
from fractions import Fraction

from ordtile.core.interval import enumerate_interval_colourings, interval_chromatic
from ordtile.datatypes.errors import InputError


@dataclass(frozen=True)
class ColouringStatistics:
    """
    Attributes
    ----------
    r : int
        Interval chromatic number.
    ell_minus : int
        Largest first class over proper interval r-colourings.
    ell_minus_star : int
        Largest last class.
    ell_plus : int
        Largest smallest class.
    alpha_plus, alpha_minus : int
        Longest independent prefix and suffix.
    alpha : int
        min(alpha_plus, alpha_minus).
    """

    r: int
    ell_minus: int
    ell_minus_star: int
    ell_plus: int
    alpha_plus: int
    alpha_minus: int
    alpha: int

    def to_dict(self):
        return {"r": self.r, "ell_minus": self.ell_minus, "ell_minus_star": self.ell_minus_star,
                "ell_plus": self.ell_plus, "alpha_plus": self.alpha_plus,
                "alpha_minus": self.alpha_minus, "alpha": self.alpha}


def colouring_statistics(H):
    r, _ = interval_chromatic(H)
    colourings = [c.lengths for c in enumerate_interval_colourings(H, r)]
    alpha_plus = max(t for t in range(1, H.h + 1) if H.is_independent(1, t))
    alpha_minus = max(t for t in range(1, H.h + 1) if H.is_independent(H.h - t + 1, H.h))
    return ColouringStatistics(
        r=r,
        ell_minus=max(c[0] for c in colourings),
        ell_minus_star=max(c[-1] for c in colourings),
        ell_plus=max(min(c) for c in colourings),
        alpha_plus=alpha_plus,
        alpha_minus=alpha_minus,
        alpha=min(alpha_plus, alpha_minus),
    )


def g_value(h1, h2, h3):
    """(2 - min(h1,h2,h3)/min(h1,h3)) * h/min(h1,h3) for the complete 3-partite pattern."""
    for x in (h1, h2, h3):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise InputError(f"part sizes must be positive integers, got {(h1, h2, h3)}")
    a = min(h1, h3)
    return (2 - Fraction(min(h1, h2, h3), a)) * Fraction(h1 + h2 + h3, a)
