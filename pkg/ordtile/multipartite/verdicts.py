"""
Bottlegraph verification: simple (no blow-up) and bounded blow-up checks, with the
analytic certificates that rule a candidate out.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from ordtile.core.interval import interval_chromatic
from ordtile.critical.statistics import colouring_statistics
from ordtile.datatypes.errors import InputError, InternalInconsistencyError
from ordtile.datatypes.multipartite import OrderedMultipartite
from ordtile.datatypes.outputs import SearchStats
from ordtile.datatypes.witness import TilingStatus, TilingWitness
from ordtile.multipartite.ParamsBottle import ParamsBottle
from ordtile.multipartite.bottle import _as_unordered, blow_up, distinct_orderings
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.engine import perfect_tiling
from ordtile.tiling.verify import verify_tiling

logger = logging.getLogger(__name__)

BLOWUP_CACHE_SIZE = 256


class BottleStatus(str, Enum):
    SIMPLE_YES = 'SimpleYes'
    NOT_SIMPLE = 'NotSimple'
    BOUNDED_YES = 'BoundedYes'
    NO = 'No'
    UNKNOWN = 'Unknown'


class CertificateKind(str, Enum):
    PART_COUNT = 'PartCount'
    COUNTING_FIRST_PART = 'CountingFirstPart'
    COUNTING_LAST_PART = 'CountingLastPart'
    STRONG_LOWER = 'StrongLower'


@dataclass(frozen=True)
class NoCertificate:
    """
    An inequality lhs < rhs showing that B is no bottlegraph of H.

    Attributes
    ----------
    kind : CertificateKind
    lhs : Fraction
        A quantity of B (part count or critical chromatic number).
    rhs : Fraction
        The bound from H it falls short of.
    """

    kind: CertificateKind
    lhs: Fraction
    rhs: Fraction

    def holds(self):
        return Fraction(self.lhs) < Fraction(self.rhs)

    def to_dict(self):
        return {"kind": self.kind.value, "lhs": str(Fraction(self.lhs)), "rhs": str(Fraction(self.rhs))}


@dataclass
class BottleVerdict:
    """
    Attributes
    ----------
    status : BottleStatus
    witnesses : dict
        Size sequence -> TilingWitness, for every ordering that tiled.
    blowups : dict
        Size sequence -> least blow-up factor that tiled (1 for simple checks).
    certificate : NoCertificate or None
        Set when status is No.
    failing_ordering : tuple or None
        First ordering with no perfect tiling, for NotSimple.
    stats : SearchStats
    """

    status: BottleStatus
    witnesses: Dict[Tuple[int, ...], TilingWitness] = field(default_factory=dict)
    blowups: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    certificate: Optional[NoCertificate] = None
    failing_ordering: Optional[Tuple[int, ...]] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def positive(self):
        return self.status in (BottleStatus.SIMPLE_YES, BottleStatus.BOUNDED_YES)

    def to_dict(self):
        orderings = [{"sizes": list(sizes), "t": self.blowups.get(sizes, 1),
                      "copies": self.witnesses[sizes].to_lists()}
                     for sizes in sorted(self.witnesses)]
        return {
            "status": self.status.value,
            "orderings": orderings,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "failing_ordering": None if self.failing_ordering is None else list(self.failing_ordering),
        }


def _tile(graph_sizes, H, budget):
    G = OrderedMultipartite(graph_sizes).to_graph()
    answer = perfect_tiling(G, H, params=ParamsTiling(budget=budget))
    if answer.status is TilingStatus.PERFECT_FOUND and not verify_tiling(G, H, answer.witness, True):
        raise InternalInconsistencyError(f"tiling of ordering {graph_sizes} failed verification")
    return answer


def _map_orderings(fn, orderings, jobs):
    if jobs > 1 and len(orderings) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, orderings))
    return [fn(o) for o in orderings]


def check_simple_bottlegraph(B, H, budget=None, params=None):
    """
    Check that every distinct ordering of B has a perfect H-tiling with no blow-up.

    Parameters
    ----------
    B : CompleteMultipartite
    H : OrderedGraph
        |H| must divide |B|.
    budget : int, optional
        Nodes per ordering; overrides `params.budget`.
    params : ParamsBottle, optional

    Returns
    -------
    BottleVerdict
        SimpleYes, NotSimple (naming the first failing ordering) or Unknown when
        some ordering timed out and none failed.
    """
    params = params or ParamsBottle()
    if budget is not None:
        params = params.replace(budget=budget)
    B = _as_unordered(B)
    if B.order % H.h:
        raise InputError(f"|H| = {H.h} does not divide |B| = {B.order}")

    orderings = [o.sizes_in_order for o in distinct_orderings(B)]
    verdict = BottleVerdict(BottleStatus.SIMPLE_YES)

    if params.jobs > 1:
        answers = _map_orderings(lambda sizes: _tile(sizes, H, params.budget), orderings, params.jobs)
    else:
        answers = []
        for sizes in orderings:
            answers.append(_tile(sizes, H, params.budget))
            if answers[-1].status is TilingStatus.NO_PERFECT:
                break

    timed_out = False
    for sizes, answer in zip(orderings, answers):
        verdict.stats.record(str(sizes), answer)
        if answer.status is TilingStatus.NO_PERFECT:
            logger.debug("ordering %s of %s has no perfect tiling", sizes, B.sizes)
            verdict.status = BottleStatus.NOT_SIMPLE
            verdict.failing_ordering = sizes
            return verdict
        if answer.status is TilingStatus.TIMEOUT:
            timed_out = True
            continue
        verdict.witnesses[sizes] = answer.witness
        verdict.blowups[sizes] = 1
    if timed_out:
        logger.warning("simple bottlegraph check of %s is inconclusive", B.sizes)
        verdict.status = BottleStatus.UNKNOWN
    return verdict


def no_certificate(B, H):
    """
    The first analytic certificate that B is not a bottlegraph of H, in the order
    part count, first-part counting, last-part counting, strong lower bound.

    Returns
    -------
    NoCertificate or None
    """
    B = _as_unordered(B)
    r, _ = interval_chromatic(H)
    if B.k < r:
        return NoCertificate(CertificateKind.PART_COUNT, Fraction(B.k), Fraction(r))
    if B.k < 2:
        return None
    chi_cr = B.crit_chrom()
    stats = colouring_statistics(H)
    first = Fraction(H.h, stats.ell_minus)
    if chi_cr < first:
        return NoCertificate(CertificateKind.COUNTING_FIRST_PART, chi_cr, first)
    last = Fraction(H.h, stats.ell_minus_star)
    if chi_cr < last:
        return NoCertificate(CertificateKind.COUNTING_LAST_PART, chi_cr, last)
    if B.k == r and H.h >= 2:
        strong = (r - 1) + Fraction(r - 1, H.h - 1)
        if chi_cr < strong:
            return NoCertificate(CertificateKind.STRONG_LOWER, chi_cr, strong)
    return None


@lru_cache(maxsize=BLOWUP_CACHE_SIZE)
def _blowup_answer(H, sizes, budget):
    # answers are deterministic for a fixed budget
    return _tile(sizes, H, budget)


def _least_blowup(sizes, H, params):
    base = OrderedMultipartite(sizes)
    stats = SearchStats()
    for t in range(1, params.t_max + 1):
        grown = blow_up(base, t)
        if grown.order % H.h:
            continue
        answer = _blowup_answer(H, grown.sizes_in_order, params.budget)
        stats.record(f"{sizes}x{t}", answer)
        if answer.status is TilingStatus.PERFECT_FOUND:
            return t, answer.witness, stats, False
        if answer.status is TilingStatus.TIMEOUT:
            return None, None, stats, True
    return None, None, stats, False


def check_bottlegraph_bounded(B, H, t_max=None, budget=None, params=None):
    """
    Look for the least blow-up t <= t_max that tiles each ordering of B perfectly.

    Analytic certificates are tried first and give status No. Otherwise the
    result is BoundedYes when every ordering tiles for some t, and Unknown when
    an ordering exhausts t_max or the node budget.

    Returns
    -------
    BottleVerdict
    """
    params = params or ParamsBottle()
    overrides = {}
    if t_max is not None:
        overrides["t_max"] = t_max
    if budget is not None:
        overrides["budget"] = budget
    if overrides:
        params = params.replace(**overrides)
    B = _as_unordered(B)

    certificate = no_certificate(B, H)
    if certificate is not None:
        if not certificate.holds():
            raise InternalInconsistencyError(f"certificate {certificate} does not hold")
        return BottleVerdict(BottleStatus.NO, certificate=certificate)

    orderings = [o.sizes_in_order for o in distinct_orderings(B)]
    results = _map_orderings(lambda sizes: _least_blowup(sizes, H, params), orderings, params.jobs)
    verdict = BottleVerdict(BottleStatus.BOUNDED_YES)
    for sizes, (t, witness, stats, timed_out) in zip(orderings, results):
        verdict.stats.merge(stats)
        if t is None:
            if timed_out:
                logger.warning("bounded check of ordering %s timed out", sizes)
            verdict.status = BottleStatus.UNKNOWN
            continue
        verdict.witnesses[sizes] = witness
        verdict.blowups[sizes] = t
    return verdict


def clear_blowup_cache():
    _blowup_answer.cache_clear()
