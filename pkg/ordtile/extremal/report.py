"""
Extremal reports: each builds one construction, measures its minimum degree
against the closed form, and certifies the obstruction by search.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from ordtile.core.copies import has_copy
from ordtile.core.interval import interval_chromatic
from ordtile.datatypes.errors import InputError, InternalInconsistencyError
from ordtile.datatypes.ordered_graph import OrderedGraph
from ordtile.datatypes.outputs import SearchStats
from ordtile.datatypes.witness import TilingStatus
from ordtile.extremal.ParamsExtremal import ParamsExtremal
from ordtile.extremal.adversarial import adversarial_labelling
from ordtile.extremal.builders import (_exact_chi_star, build_fourpart, build_F1, build_F2,
                                       build_F3, counting_obstruction_fourpart, fourpart_pattern, f1_classes,
                                       f1_singleton, f2_ell)
from ordtile.functions.rationals import qstr
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.cover import h_cover
from ordtile.tiling.engine import perfect_tiling

logger = logging.getLogger(__name__)


@dataclass
class ExtremalReport:
    """
    Attributes
    ----------
    construction : str
        One of F1, F2, F3, fourpart.
    parameters : dict
        The builder arguments.
    graph : OrderedGraph
    min_degree : int
        Measured on `graph`.
    claimed_bound : Fraction
        The closed-form degree, evaluated.
    bound_expression : str
        The closed form, in n and the construction parameters.
    obstruction : dict
        "kind" is NoCoverAt, NoPerfectTiling or NoCopyOfH; the other keys hold its data.
    verified : bool or None
        Whether the obstruction was certified; None when no pattern was given.
    notes : list of str
    """

    construction: str
    parameters: Dict[str, object]
    graph: OrderedGraph
    min_degree: int
    claimed_bound: Fraction
    bound_expression: str
    obstruction: Dict[str, object]
    verified: Optional[bool] = None
    notes: List[str] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self):
        return {
            "construction": self.construction,
            "parameters": {k: (qstr(v) if isinstance(v, Fraction) else v)
                           for k, v in self.parameters.items()},
            "n": self.graph.h,
            "min_degree": self.min_degree,
            "claimed_bound": {"value": qstr(self.claimed_bound), "expression": self.bound_expression},
            "obstruction": self.obstruction,
            "verified": self.verified,
            "notes": list(self.notes),
        }


def _check_degree(graph, expected, name):
    measured = graph.min_degree()
    if measured != expected:
        raise InternalInconsistencyError(f"{name} has minimum degree {measured}, expected {expected}")
    return measured


def report_F1(n, r, i, j, H=None, params=None):
    """
    F1(n, r, i, j) and the vertex u no copy of H reaches.

    Without H only the degree is checked. With H, `verified` says whether u is
    missed by every copy, which holds when (i, j) is a local barrier of H.
    """
    graph = build_F1(n, r, i, j)
    q = (n - 1) // r
    min_degree = _check_degree(graph, n - 1 - q, "F1")
    u = f1_singleton(n, r, i, j)
    report = ExtremalReport(
        construction="F1",
        parameters={"n": n, "r": r, "i": i, "j": j},
        graph=graph,
        min_degree=min_degree,
        claimed_bound=Fraction(n - 1 - q),
        bound_expression="n-1-floor((n-1)/r)",
        obstruction={"kind": "NoCoverAt", "vertex": u},
        notes=[f"class sizes {f1_classes(n, r, i, j)}; leftover vertices go to the last "
               "classes other than U_i and U_j"],
    )
    if H is not None:
        if H.h > n:
            raise InputError(f"|H| = {H.h} exceeds n = {n}")
        jobs = (params or ParamsExtremal()).jobs
        uncovered = h_cover(graph, H, params=ParamsTiling(jobs=jobs))
        report.obstruction["uncovered"] = sorted(uncovered)
        report.verified = u in uncovered
        if not report.verified:
            logger.warning("vertex %d of F1(%d,%d,%d,%d) lies in a copy of H", u, n, r, i, j)
    return report


def report_F2(H, n, chi_star, budget=None, params=None):
    """
    F2(H, n) under the first ordering that has no perfect H-tiling.

    Raises whatever adversarial_labelling raises when no such ordering is
    certified.
    """
    value = _exact_chi_star(chi_star)
    B = build_F2(H, n, chi_star)
    ell = f2_ell(n, value)
    stats = SearchStats()
    ordering = adversarial_labelling(B, H, budget=budget, params=params, stats=stats)
    graph = ordering.to_graph()
    min_degree = _check_degree(graph, n - ell, "F2")
    bound = (1 - 1 / value) * n - 1
    if min_degree < bound:
        raise InternalInconsistencyError(f"F2 minimum degree {min_degree} is below {bound}")
    return ExtremalReport(
        construction="F2",
        parameters={"n": n, "chi_star": value, "ell": ell},
        graph=graph,
        min_degree=min_degree,
        claimed_bound=bound,
        bound_expression="(1-1/chi_star)*n-1",
        obstruction={"kind": "NoPerfectTiling", "ordering": list(ordering.sizes_in_order),
                     "nodes": stats.total_nodes},
        verified=True,
        stats=stats,
    )


def report_F3(H, n):
    """The balanced complete (χ_<(H)-1)-partite graph, which holds no copy of H."""
    graph = build_F3(H, n)
    r, _ = interval_chromatic(H)
    expected = n - -(-n // (r - 1))
    min_degree = _check_degree(graph, expected, "F3")
    verified = H.h > n or not has_copy(graph, H)
    if not verified:
        raise InternalInconsistencyError(f"F3 on {n} vertices contains a copy of H")
    return ExtremalReport(
        construction="F3",
        parameters={"n": n, "r": r},
        graph=graph,
        min_degree=min_degree,
        claimed_bound=Fraction(expected),
        bound_expression="n-ceil(n/(r-1))",
        obstruction={"kind": "NoCopyOfH"},
        verified=True,
    )


def report_fourpart(ell, n, search=True, budget=None):
    """
    The complete 4-partite space barrier against the pattern with parts (l, 1, l).

    The counting inequality is always evaluated; with `search` the missing perfect
    tiling is also certified by exhaustive search.
    """
    H = fourpart_pattern(ell)
    if n % H.h:
        raise InputError(f"|H| = {H.h} does not divide n = {n}")
    ordering = build_fourpart(ell, n)
    graph = ordering.to_graph()
    q = ordering.sizes_in_order[0] - 1
    min_degree = _check_degree(graph, n - q - 1, "fourpart")
    counting = counting_obstruction_fourpart(ell, ordering)
    obstruction = {"kind": "NoPerfectTiling", "ordering": list(ordering.sizes_in_order),
                   "counting": counting.to_dict(), "counting_holds": counting.holds()}
    verified = counting.holds()
    stats = SearchStats()
    if search:
        answer = perfect_tiling(graph, H, params=ParamsTiling(budget=budget or ParamsExtremal().budget))
        stats.record(str(ordering), answer)
        obstruction["search"] = answer.status.value
        if answer.status is TilingStatus.PERFECT_FOUND:
            if counting.holds():
                raise InternalInconsistencyError(f"{ordering} tiles although the counting bound holds")
            verified = False
        elif answer.status is TilingStatus.NO_PERFECT:
            verified = True
    return ExtremalReport(
        construction="fourpart",
        parameters={"ell": ell, "n": n},
        graph=graph,
        min_degree=min_degree,
        claimed_bound=Fraction(n - q - 1),
        bound_expression="n-floor(n*ell^2/(4*ell^2-1))-1",
        obstruction=obstruction,
        verified=verified,
        stats=stats,
    )
