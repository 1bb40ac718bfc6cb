"""
Desk-scale check of x-bottlegraphs: bottle-shaped complete multipartite graphs
every ordering of which has an (x,H)-tiling.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from ordtile.datatypes.errors import InputError, InternalInconsistencyError
from ordtile.datatypes.outputs import SearchStats
from ordtile.datatypes.witness import TilingStatus, TilingWitness
from ordtile.functions.rationals import parse_rational, qstr
from ordtile.multipartite.ParamsBottle import ParamsBottle
from ordtile.multipartite.bottle import _as_unordered, distinct_orderings
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.engine import x_target, x_tiling
from ordtile.tiling.verify import verify_tiling

logger = logging.getLogger(__name__)


class XBottleStatus(str, Enum):
    YES = 'Yes'
    NO = 'No'
    UNKNOWN = 'Unknown'


@dataclass
class XBottleVerdict:
    """
    Attributes
    ----------
    status : XBottleStatus
    x : Fraction
    target : int
        Copies needed per ordering.
    witnesses : dict
        Size sequence -> TilingWitness with at least `target` copies.
    failing_ordering : tuple or None
    stats : SearchStats
    """

    status: XBottleStatus
    x: object
    target: int
    witnesses: Dict[Tuple[int, ...], TilingWitness] = field(default_factory=dict)
    failing_ordering: Optional[Tuple[int, ...]] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self):
        return {
            "status": self.status.value,
            "x": qstr(self.x),
            "target": self.target,
            "orderings": [{"sizes": list(sizes), "copies": self.witnesses[sizes].to_lists()}
                          for sizes in sorted(self.witnesses)],
            "failing_ordering": None if self.failing_ordering is None else list(self.failing_ordering),
        }


def check_x_bottlegraph(B, x, H, budget=None, params=None):
    """
    Decide whether every ordering of B has an H-tiling covering ceil(x|B|) vertices.

    Parameters
    ----------
    B : CompleteMultipartite
        Must have the shape (m, ..., m, s) with s <= m.
    x : Fraction or str
        Rational in (0, 1].
    H : OrderedGraph
    budget : int, optional
        Nodes per ordering; overrides `params.budget`.
    params : ParamsBottle, optional

    Returns
    -------
    XBottleVerdict
        No names the first failing ordering; Unknown when an ordering timed out
        and none failed.
    """
    params = params or ParamsBottle()
    if budget is not None:
        params = params.replace(budget=budget)
    B = _as_unordered(B)
    if not B.is_bottle_shaped():
        raise InputError(f"{B} is not of the shape (m, ..., m, s)")
    x = parse_rational(x)
    if not 0 < x <= 1:
        raise InputError(f"x must lie in (0, 1], got {x}")

    tiling_params = ParamsTiling(budget=params.budget)
    orderings = distinct_orderings(B)
    verdict = XBottleVerdict(XBottleStatus.YES, x, x_target(B.order, H.h, x))

    def decide(ordering):
        G = ordering.to_graph()
        answer = x_tiling(G, H, x, params=tiling_params)
        if answer.witness is not None and not verify_tiling(G, H, answer.witness):
            raise InternalInconsistencyError(f"(x,H)-tiling of {ordering} failed verification")
        return answer

    if params.jobs > 1 and len(orderings) > 1:
        with ThreadPoolExecutor(max_workers=params.jobs) as pool:
            answers = list(pool.map(decide, orderings))
    else:
        answers = []
        for ordering in orderings:
            answers.append(decide(ordering))
            if answers[-1].status is TilingStatus.TARGET_UNREACHABLE:
                break

    timed_out = False
    for ordering, answer in zip(orderings, answers):
        sizes = ordering.sizes_in_order
        verdict.stats.record(str(ordering), answer)
        if answer.status is TilingStatus.TARGET_UNREACHABLE:
            verdict.status = XBottleStatus.NO
            verdict.failing_ordering = sizes
            return verdict
        if answer.status is TilingStatus.TIMEOUT:
            timed_out = True
            continue
        verdict.witnesses[sizes] = answer.witness
    if timed_out:
        logger.warning("x-bottlegraph check of %s at x = %s is inconclusive", B.sizes, x)
        verdict.status = XBottleStatus.UNKNOWN
    return verdict
