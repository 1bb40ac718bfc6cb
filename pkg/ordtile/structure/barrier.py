"""
Local barriers.

With r = χ_<(H), a pair (i, j) of distinct indices in [r+1] is a local barrier
when every interval (r+1)-colouring of H (empty classes allowed) whose class i is
a singleton {v} has an edge between v and class j.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ordtile.core.interval import interval_chromatic, iter_interval_colourings
from ordtile.datatypes.errors import UnsupportedInputError
from ordtile.datatypes.ordered_graph import IntervalColouring


@dataclass(frozen=True)
class BarrierWitness:
    """
    Attributes
    ----------
    i, j : int
        Class indices in [r+1], i != j.
    vacuous : bool
        True when no (r+1)-colouring has class i a singleton, so the condition holds
        without any colouring to test.
    """

    i: int
    j: int
    vacuous: bool = False

    def to_dict(self):
        return {"i": self.i, "j": self.j, "vacuous": self.vacuous}


@dataclass(frozen=True)
class BarrierResult:
    """
    Outcome of the barrier scan.

    Attributes
    ----------
    witness : BarrierWitness or None
        The lexicographically first barrier, if any.
    refutations : dict
        For every candidate (i, j) scanned before the witness (all of them when
        there is none), a colouring with class i a singleton {v} and no edge from v
        to class j.
    r : int
        The interval chromatic number of H.
    """

    witness: Optional[BarrierWitness]
    refutations: Dict[Tuple[int, int], IntervalColouring] = field(default_factory=dict)
    r: int = 0

    @property
    def found(self):
        return self.witness is not None


def _require_multicolour(H):
    r, _ = interval_chromatic(H)
    if r < 2:
        raise UnsupportedInputError("local barriers and flexibility need χ_<(H) >= 2")
    return r


def find_local_barrier(H, params=None):
    """
    Scan the candidate pairs (i, j) of [r+1] lexicographically and return the first
    barrier together with the refutations of the earlier candidates.

    Parameters
    ----------
    H : OrderedGraph
        Pattern with χ_<(H) >= 2.

    Returns
    -------
    BarrierResult
    """
    r = _require_multicolour(H)
    classes = r + 1
    first_refutation = {}
    has_singleton = [False] * (classes + 1)

    for colouring in iter_interval_colourings(H, classes, allow_empty=True, params=params):
        for i in range(1, classes + 1):
            if colouring.lengths[i - 1] != 1:
                continue
            has_singleton[i] = True
            v = colouring.interval(i)[0]
            for j in range(1, classes + 1):
                if j == i or (i, j) in first_refutation:
                    continue
                if not H.adj_mask(v) & colouring.class_mask(j):
                    first_refutation[(i, j)] = colouring

    refutations = {}
    for i in range(1, classes + 1):
        for j in range(1, classes + 1):
            if i == j:
                continue
            if (i, j) in first_refutation:
                refutations[(i, j)] = first_refutation[(i, j)]
                continue
            return BarrierResult(BarrierWitness(i, j, vacuous=not has_singleton[i]), refutations, r)
    return BarrierResult(None, refutations, r)


def barrier_refuted(H, i, j, lengths):
    """
    Independent check of one refutation: `lengths` is a proper interval colouring of
    H whose class i is a single vertex with no neighbour in class j.
    """
    colouring = lengths if isinstance(lengths, IntervalColouring) else IntervalColouring(tuple(lengths))
    if colouring.h != H.h or not (1 <= i <= colouring.r and 1 <= j <= colouring.r) or i == j:
        return False
    if not colouring.is_proper(H) or colouring.lengths[i - 1] != 1:
        return False
    v = colouring.interval(i)[0]
    lo, hi = colouring.interval(j)
    return not any(H.has_edge(v, w) for w in range(lo, hi + 1))
