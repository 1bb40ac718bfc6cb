"""
Limits for bottlegraph checks.
"""

from ordtile.datatypes.AbstractParams import AbstractParams


class ParamsBottle(AbstractParams):
    """
    Attributes
    ----------
    t_max : int
        Largest blow-up factor tried per ordering by the bounded check.
    budget : int
        Tiling search nodes per ordering and blow-up.
    jobs : int
        Worker threads over orderings; 1 runs inline.
    """

    defaults = {"t_max": 4, "budget": 10 ** 7, "jobs": 1}
