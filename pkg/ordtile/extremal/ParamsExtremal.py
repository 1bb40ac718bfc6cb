"""
Limits for the searches that certify extremal obstructions.
"""

from ordtile.datatypes.AbstractParams import AbstractParams


class ParamsExtremal(AbstractParams):
    """
    Attributes
    ----------
    budget : int
        Tiling nodes per ordering.
    jobs : int
        Worker threads over orderings.
    """

    defaults = {"budget": 10 ** 7, "jobs": 1}
