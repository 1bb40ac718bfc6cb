"""
Exact values of the ordered critical chromatic number where a closed formula or a
certified bottlegraph pins it down; a certified interval otherwise.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from ordtile.core.interval import interval_chromatic
from ordtile.critical.ParamsChiStar import ParamsChiStar
from ordtile.critical.bounds import chi_star_bounds
from ordtile.critical.statistics import colouring_statistics, g_value
from ordtile.datatypes.errors import InternalInconsistencyError
from ordtile.datatypes.multipartite import CompleteMultipartite, OrderedMultipartite
from ordtile.multipartite.ParamsBottle import ParamsBottle
from ordtile.multipartite.bottle import bottle_shape, crit_chrom_of_shape
from ordtile.multipartite.verdicts import BottleStatus, check_simple_bottlegraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChiStarResult:
    """
    Attributes
    ----------
    kind : str
        "exact" or "interval".
    value : Fraction or None
        The exact value.
    rule : str or None
        Name of the rule that fixed the value.
    lower, upper : Fraction
        Certified bounds; equal to `value` for exact results.
    lower_strict : bool
    strict_floor : int
        r - 1.
    evidence : dict
        Provenance of each side.
    bottlegraph : CompleteMultipartite or None
        The simple bottlegraph certified by the scan, when one was used.
    """

    kind: str
    lower: Fraction
    upper: Fraction
    strict_floor: int
    value: Optional[Fraction] = None
    rule: Optional[str] = None
    lower_strict: bool = False
    evidence: Dict[str, List[str]] = field(default_factory=dict)
    bottlegraph: Optional[CompleteMultipartite] = None

    @property
    def is_exact(self):
        return self.kind == "exact"

    def to_dict(self):
        doc = {"kind": self.kind, "evidence": {k: list(v) for k, v in sorted(self.evidence.items())}}
        if self.is_exact:
            doc["value"] = str(self.value)
            doc["rule"] = self.rule
        else:
            doc["lower"] = str(self.lower)
            doc["lower_strict"] = self.lower_strict
            doc["upper"] = str(self.upper)
        if self.bottlegraph is not None:
            doc["bottlegraph"] = list(self.bottlegraph.sizes)
        return doc


def complete_parts(H):
    """Part sizes when H is the complete multipartite ordered graph of its greedy colouring, else None."""
    r, colouring = interval_chromatic(H)
    if r < 2:
        return None
    if OrderedMultipartite(colouring.lengths).to_graph() != H:
        return None
    return colouring.lengths


def _candidate_shapes(h, r, lower, upper, m_max, max_vertices):
    shapes = []
    for k in range(r, h + 1):
        for m in range(1, m_max + 1):
            if (k - 1) * m + 1 > max_vertices:
                break
            for s in range(1, m + 1):
                total = (k - 1) * m + s
                if total > max_vertices or total % h:
                    continue
                value = crit_chrom_of_shape(k, m, s)
                if lower <= value < upper:
                    shapes.append((value, bottle_shape(k, m, s).sizes))
    shapes.sort()
    return shapes


def _exact(value, rule, bounds, evidence_rule, bottlegraph=None):
    if value <= bounds.strict_floor or not bounds.lower <= value <= bounds.upper:
        raise InternalInconsistencyError(
            f"rule {rule} gives {value}, outside the bounds ({bounds.strict_floor}, "
            f"[{bounds.lower}, {bounds.upper}])")
    evidence = dict(bounds.evidence)
    evidence["value"] = [evidence_rule]
    return ChiStarResult(kind="exact", lower=value, upper=value, strict_floor=bounds.strict_floor,
                         value=value, rule=rule, evidence=evidence, bottlegraph=bottlegraph)


def chi_star_exact(H, search_effort=None, params=None):
    """
    Evaluate χ*cr(H).

    Rules in priority order:

    1. χ_<(H) = 2: h/alpha(H).
    2. H complete multipartite with a smallest part first or last: h over that part.
    3. H complete 3-partite: g(H).
    4. the general bounds coincide.
    5. a scan over bottle shapes (m, ..., m, s) between the bounds, by increasing
       critical chromatic number; the first certified simple bottlegraph gives the
       value when it meets the lower bound, and otherwise a better upper bound.

    Parameters
    ----------
    H : OrderedGraph
        A pattern with at least one edge.
    search_effort : str, optional
        none, low, default or high; overrides `params`.
    params : ParamsChiStar, optional

    Returns
    -------
    ChiStarResult
    """
    params = params or ParamsChiStar()
    if search_effort is not None:
        params = params.replace(search_effort=search_effort)
    stats = colouring_statistics(H)
    bounds = chi_star_bounds(H, stats)
    r, h = stats.r, H.h

    if r == 2:
        return _exact(Fraction(h, stats.alpha), "bipartite", bounds, "bipartite")
    parts = complete_parts(H)
    if parts is not None:
        smallest = min(parts)
        if parts[0] == smallest or parts[-1] == smallest:
            return _exact(Fraction(h, smallest), "complete_end_class", bounds, "complete_end_class")
        if r == 3:
            return _exact(g_value(*parts), "complete_3_partite", bounds, "complete_3_partite")
    if bounds.lower == bounds.upper:
        return _exact(bounds.lower, "bounds_meet", bounds, "bounds_meet")

    m_max, max_vertices = params.limits(h)
    upper = bounds.upper
    evidence = dict(bounds.evidence)
    found = None
    bottle_params = ParamsBottle(budget=params.budget, jobs=params.jobs)
    for value, sizes in _candidate_shapes(h, r, bounds.lower, bounds.upper, m_max, max_vertices):
        verdict = check_simple_bottlegraph(CompleteMultipartite(sizes), H, params=bottle_params)
        logger.debug("candidate %s (χcr %s): %s", sizes, value, verdict.status.value)
        if verdict.status is BottleStatus.SIMPLE_YES:
            found = (value, CompleteMultipartite(sizes))
            break
    if found is not None:
        value, B = found
        if value == bounds.lower:
            return _exact(value, "bottlegraph_scan", bounds, "bottlegraph_scan", B)
        upper = value
        evidence["upper"] = ["bottlegraph_scan"]
        return ChiStarResult(kind="interval", lower=bounds.lower, upper=upper,
                             strict_floor=bounds.strict_floor, evidence=evidence, bottlegraph=B)
    return ChiStarResult(kind="interval", lower=bounds.lower, upper=upper,
                         strict_floor=bounds.strict_floor, evidence=evidence)
