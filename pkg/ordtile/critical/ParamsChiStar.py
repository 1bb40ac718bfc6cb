"""
Effort levels for the exact critical chromatic number.
"""

from ordtile.datatypes.AbstractParams import AbstractParams
from ordtile.datatypes.errors import InputError

# level -> (m_max as a function of h, largest candidate bottlegraph)
EFFORT_LEVELS = {
    "none": (lambda h: 0, 0),
    "low": (lambda h: h, 24),
    "default": (lambda h: h * h, 40),
    "high": (lambda h: 2 * h * h, 60),
}


class ParamsChiStar(AbstractParams):
    """
    Attributes
    ----------
    search_effort : str
        One of none, low, default, high; bounds the candidate bottlegraph scan.
    budget : int
        Tiling nodes per candidate ordering.
    jobs : int
        Worker threads over the orderings of one candidate.
    """

    defaults = {"search_effort": "default", "budget": 10 ** 6, "jobs": 1}

    def _check(self, values):
        if values["search_effort"] not in EFFORT_LEVELS:
            raise InputError(f"search_effort must be one of {sorted(EFFORT_LEVELS)}, "
                             f"got {values['search_effort']!r}")
        super()._check({k: v for k, v in values.items() if k != "search_effort"})

    def limits(self, h):
        """(m_max, max_bottle_vertices) for a pattern on h vertices."""
        m_of, vertices = EFFORT_LEVELS[self.search_effort]
        return m_of(h), vertices
