"""
Search limits for the tiling engine.
"""

from ordtile.datatypes.AbstractParams import AbstractParams


class ParamsTiling(AbstractParams):
    """
    Limits for one tiling search.

    Attributes
    ----------
    budget : int
        Search nodes allowed before the answer becomes Timeout.
    feasibility_depth : int
        Search depth up to which the coverability of every remaining block is
        recomputed.
    memo_limit : int
        Most dead states remembered; later failures are not stored.
    jobs : int
        Worker threads for the per-block cover check. 1 runs inline.
    """

    defaults = {
        "budget": 10 ** 7,
        "feasibility_depth": 2,
        "memo_limit": 2 * 10 ** 6,
        "jobs": 1,
    }

    def _check(self, values):
        super()._check(values)
        if values["jobs"] < 1:
            values["jobs"] = 1
