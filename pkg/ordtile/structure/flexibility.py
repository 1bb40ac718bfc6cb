"""
Flexibility and fixed prefixes.

H with χ_<(H) = r is flexible when, for every i in [r-1], some interval
(r+1)-colouring V_1 < ... < V_i < {x} < V_{i+1} < ... < V_r stays a proper
r-colouring after merging {x} into either neighbour.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ordtile.core.interval import enumerate_interval_colourings
from ordtile.datatypes.ordered_graph import IntervalColouring
from ordtile.structure.barrier import _require_multicolour


@dataclass(frozen=True)
class FlexResult:
    """
    Attributes
    ----------
    flexible : bool
    witness : tuple of IntervalColouring or None
        For a flexible H, entry i-1 is the (r+1)-colouring for index i; its class
        i+1 is the singleton {x}.
    blocking_index : int or None
        For a non-flexible H, the least index with no such colouring.
    """

    flexible: bool
    witness: Optional[Tuple[IntervalColouring, ...]] = None
    blocking_index: Optional[int] = None


def _proper_lengths(H, r, params=None):
    return [c.lengths for c in enumerate_interval_colourings(H, r, allow_empty=False, params=params)]


def split_colouring(lengths, i):
    """The (r+1)-colouring obtained by splitting off the last vertex of class i."""
    lengths = tuple(lengths)
    return IntervalColouring(lengths[:i - 1] + (lengths[i - 1] - 1, 1) + lengths[i:])


def merge_left(lengths, i):
    # merge the singleton class i+1 into class i
    lengths = tuple(lengths)
    return lengths[:i - 1] + (lengths[i - 1] + 1,) + lengths[i + 1:]


def merge_right(lengths, i):
    lengths = tuple(lengths)
    return lengths[:i] + (lengths[i + 1] + 1,) + lengths[i + 2:]


def is_flexible(H, params=None):
    """
    Decide flexibility.

    For every index i the r-colourings Q are tried in lexicographic order; Q works
    when moving the boundary after class i one vertex to the left is again a
    proper r-colouring.

    Returns
    -------
    FlexResult
    """
    r = _require_multicolour(H)
    proper = _proper_lengths(H, r, params)
    proper_set = set(proper)
    witness = []
    for i in range(1, r):
        chosen = None
        for q in proper:
            shifted = q[:i - 1] + (q[i - 1] - 1, q[i] + 1) + q[i + 1:]
            if shifted in proper_set:
                chosen = split_colouring(q, i)
                break
        if chosen is None:
            return FlexResult(False, None, i)
        witness.append(chosen)
    return FlexResult(True, tuple(witness), None)


def fixed_prefix_indices(H, params=None):
    """
    Indices i in [r-1] such that the first i intervals hold the same number of
    vertices in every proper interval r-colouring of H.

    Returns
    -------
    list of int
        Sorted.
    """
    r = _require_multicolour(H)
    proper = _proper_lengths(H, r, params)
    fixed = []
    for i in range(1, r):
        if len({sum(q[:i]) for q in proper}) == 1:
            fixed.append(i)
    return fixed


def verify_flex_witness(H, r, i, colouring):
    """Both merges of the singleton class i+1 are proper r-colourings with no empty class."""
    lengths = tuple(colouring.lengths)
    if len(lengths) != r + 1 or lengths[i] != 1:
        return False
    for merged in (merge_left(lengths, i), merge_right(lengths, i)):
        candidate = IntervalColouring(merged)
        if not candidate.nonempty() or not candidate.is_proper(H):
            return False
    return True
