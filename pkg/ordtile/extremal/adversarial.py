"""
Search for an ordering of a complete multipartite graph that admits no perfect
tiling.
"""

import logging
from concurrent.futures import ThreadPoolExecutor

from ordtile.datatypes.errors import ContradictionError, InconclusiveError, InputError
from ordtile.datatypes.outputs import SearchStats
from ordtile.datatypes.witness import TilingStatus
from ordtile.extremal.ParamsExtremal import ParamsExtremal
from ordtile.multipartite.bottle import _as_unordered, distinct_orderings
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.engine import perfect_tiling

logger = logging.getLogger(__name__)


def adversarial_labelling(B, H, budget=None, params=None, stats=None):
    """
    The first ordering of B, in lexicographic order of part sizes, whose ordered
    graph has no perfect H-tiling.

    Orderings are decided in that order, so the answer does not depend on
    `params.jobs`. A timeout on an ordering that comes before any failure makes the
    answer undecidable within the budget.

    Parameters
    ----------
    B : CompleteMultipartite
    H : OrderedGraph
    budget : int, optional
        Nodes per ordering; overrides `params.budget`.
    params : ParamsExtremal, optional
    stats : SearchStats, optional
        Receives one record per ordering searched.

    Returns
    -------
    OrderedMultipartite

    Raises
    ------
    InconclusiveError
        An ordering ran out of budget before a failing one was found.
    ContradictionError
        Every ordering tiles perfectly.
    """
    params = params or ParamsExtremal()
    if budget is not None:
        params = params.replace(budget=budget)
    B = _as_unordered(B)
    if B.order % H.h:
        raise InputError(f"|H| = {H.h} does not divide |B| = {B.order}")
    stats = stats if stats is not None else SearchStats()
    tiling_params = ParamsTiling(budget=params.budget)
    orderings = distinct_orderings(B)

    def decide(ordering):
        return perfect_tiling(ordering.to_graph(), H, params=tiling_params)

    if params.jobs > 1 and len(orderings) > 1:
        with ThreadPoolExecutor(max_workers=params.jobs) as pool:
            answers = pool.map(decide, orderings)
            pairs = list(zip(orderings, answers))
    else:
        pairs = ((o, decide(o)) for o in orderings)

    for ordering, answer in pairs:
        stats.record(str(ordering), answer)
        if answer.status is TilingStatus.NO_PERFECT:
            logger.info("ordering %s of %s has no perfect tiling", ordering.sizes_in_order, B.sizes)
            return ordering
        if answer.status is TilingStatus.TIMEOUT:
            logger.warning("ordering %s timed out after %d nodes", ordering.sizes_in_order,
                           answer.nodes_explored)
            raise InconclusiveError(f"ordering {ordering} of {B} could not be decided "
                                    f"within {params.budget} nodes")
    raise ContradictionError(f"every ordering of {B} tiles perfectly; "
                             "construction or χ*cr input is wrong")
