"""
Headline thresholds of a pattern: the perfect-tiling case and coefficient, the
H-cover coefficient and the almost-perfect-tiling coefficient.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from ordtile.core.interval import interval_chromatic
from ordtile.critical.exact import ChiStarResult, chi_star_exact
from ordtile.critical.statistics import ColouringStatistics, colouring_statistics
from ordtile.datatypes.errors import InputError, InternalInconsistencyError, UnsupportedInputError
from ordtile.functions.rationals import qstr
from ordtile.partial.profile import tj_x0
from ordtile.structure.barrier import BarrierWitness, find_local_barrier
from ordtile.structure.flexibility import fixed_prefix_indices, is_flexible

logger = logging.getLogger(__name__)


class PerfectCase(str, Enum):
    CASE_I = 'CaseI'
    CASE_II = 'CaseII'
    CASE_III = 'CaseIII'
    BIPARTITE = 'BipartiteOutOfScope'
    UNRESOLVED = 'UnresolvedChiStar'


def _coeff(value):
    return 1 - 1 / Fraction(value)


def _coeff_interval(lower, upper):
    return (_coeff(lower), _coeff(upper))


@dataclass
class ThresholdReport:
    """
    Attributes
    ----------
    h : int
    edges : list of tuple
    chi_lt : int
        χ_<(H).
    chi_star : ChiStarResult
    barrier : BarrierWitness or None
    flexible : bool
    fixed_prefix : list of int
    perfect_case : PerfectCase
    perfect_coeff : Fraction or None
        Perfect-tiling minimum-degree coefficient, when exact.
    perfect_coeff_interval : tuple of Fraction or None
        Its range when χ*cr is only bracketed but the case is still determined.
    cover_coeff : Fraction
    almost_perfect_coeff : Fraction or None
    statistics : ColouringStatistics
    tj : tuple or None
        (T, J, x0).
    """

    h: int
    edges: List[Tuple[int, int]]
    chi_lt: int
    chi_star: ChiStarResult
    barrier: Optional[BarrierWitness]
    flexible: bool
    fixed_prefix: List[int]
    perfect_case: PerfectCase
    cover_coeff: Fraction
    statistics: ColouringStatistics
    perfect_coeff: Optional[Fraction] = None
    perfect_coeff_interval: Optional[Tuple[Fraction, Fraction]] = None
    almost_perfect_coeff: Optional[Fraction] = None
    tj: Optional[Tuple[int, int, Fraction]] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self):
        doc = {
            "h": self.h,
            "edges": [list(e) for e in self.edges],
            "chi_lt": self.chi_lt,
            "chi_star": self.chi_star.to_dict(),
            "barrier": None if self.barrier is None else self.barrier.to_dict(),
            "flexible": self.flexible,
            "fixed_prefix": list(self.fixed_prefix),
            "perfect_case": self.perfect_case.value,
            "perfect_coeff": None if self.perfect_coeff is None else qstr(self.perfect_coeff),
            "perfect_coeff_interval": None if self.perfect_coeff_interval is None
            else [qstr(q) for q in self.perfect_coeff_interval],
            "cover_coeff": qstr(self.cover_coeff),
            "almost_perfect_coeff": None if self.almost_perfect_coeff is None
            else qstr(self.almost_perfect_coeff),
            "colouring_statistics": self.statistics.to_dict(),
            "tj_x0": None if self.tj is None
            else {"T": self.tj[0], "J": self.tj[1], "x0": qstr(self.tj[2])},
            "notes": list(self.notes),
        }
        return doc


def _perfect_case(r, chi_star, barrier):
    """(case, exact coefficient, coefficient interval)."""
    if r == 2:
        return PerfectCase.BIPARTITE, None, None
    if chi_star.is_exact:
        value = chi_star.value
        if value >= r:
            return PerfectCase.CASE_I, _coeff(value), None
        if barrier is not None:
            return PerfectCase.CASE_II, _coeff(r), None
        return PerfectCase.CASE_III, _coeff(value), None
    lower, upper = chi_star.lower, chi_star.upper
    if lower >= r:
        return PerfectCase.CASE_I, None, _coeff_interval(lower, upper)
    if upper < r:
        if barrier is not None:
            return PerfectCase.CASE_II, _coeff(r), None
        return PerfectCase.CASE_III, None, _coeff_interval(lower, upper)
    return PerfectCase.UNRESOLVED, None, None


def classify(H, chi_star=None, params=None):
    """
    Classify H by the perfect-tiling threshold.

    With r = χ_<(H) >= 3, Case I is χ*cr >= r, Case II is χ*cr < r with a local
    barrier and Case III is χ*cr < r without one. Bipartite patterns (r = 2) get
    the cover and almost-perfect coefficients only.

    Parameters
    ----------
    H : OrderedGraph
    chi_star : ChiStarResult, optional
        Computed with `params` when omitted.
    params : ParamsChiStar, optional

    Returns
    -------
    ThresholdReport
    """
    r, _ = interval_chromatic(H)
    if r < 2:
        raise UnsupportedInputError("thresholds need a pattern with at least one edge")
    if chi_star is None:
        chi_star = chi_star_exact(H, params=params)
    elif not isinstance(chi_star, ChiStarResult):
        raise InputError(f"chi_star must be a ChiStarResult, got {type(chi_star).__name__}")

    barrier = find_local_barrier(H).witness
    flex = is_flexible(H)
    case, coeff, interval = _perfect_case(r, chi_star, barrier)

    below_r = chi_star.upper < r
    if below_r and not flex.flexible:
        raise InternalInconsistencyError(f"χ*cr < {r} but H is not flexible at index {flex.blocking_index}")

    report = ThresholdReport(
        h=H.h,
        edges=list(H.sorted_edges()),
        chi_lt=r,
        chi_star=chi_star,
        barrier=barrier,
        flexible=flex.flexible,
        fixed_prefix=fixed_prefix_indices(H),
        perfect_case=case,
        cover_coeff=_coeff(r) if barrier is not None else _coeff(r - 1),
        statistics=colouring_statistics(H),
        perfect_coeff=coeff,
        perfect_coeff_interval=interval,
        almost_perfect_coeff=_coeff(chi_star.value) if chi_star.is_exact else None,
        tj=tj_x0(H),
    )
    if case is PerfectCase.UNRESOLVED:
        report.notes.append(f"χ*cr lies in [{qstr(chi_star.lower)}, {qstr(chi_star.upper)}], "
                            f"which straddles χ_< = {r}")
        logger.warning("perfect-tiling case of H is unresolved")
    if report.perfect_coeff is not None and report.cover_coeff > report.perfect_coeff:
        raise InternalInconsistencyError("cover coefficient exceeds the perfect-tiling coefficient")
    return report
