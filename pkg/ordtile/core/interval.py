"""
Interval colourings of ordered graphs and the interval chromatic number.
"""

from ordtile.datatypes.AbstractParams import ParamsCore
from ordtile.datatypes.errors import InputError
from ordtile.datatypes.ordered_graph import IntervalColouring, OrderedGraph
from ordtile.functions.bitsets import interval_mask


def check_pattern_size(H, params=None):
    params = params or ParamsCore()
    if H.h > params.h_limit:
        raise InputError(f"pattern has {H.h} vertices; the configured h_limit is {params.h_limit}")


def interval_chromatic(H: OrderedGraph):
    """
    Least number of consecutive independent intervals covering [h].

    A new interval starts exactly when the next vertex has a neighbour inside the
    current interval. This left-to-right greedy is optimal.

    Parameters
    ----------
    H : OrderedGraph

    Returns
    -------
    r : int
        The interval chromatic number.
    witness : IntervalColouring
        The greedy colouring, with r nonempty intervals.
    """
    if not isinstance(H, OrderedGraph):
        raise InputError(f"expected an OrderedGraph, got {type(H).__name__}")
    lengths = []
    start = 1
    for v in range(2, H.h + 1):
        if H.adj_mask(v) & interval_mask(start, v - 1):
            lengths.append(v - start)
            start = v
    lengths.append(H.h + 1 - start)
    return len(lengths), IntervalColouring(tuple(lengths))


def is_proper_colouring(H, lengths):
    """True when `lengths` sums to h and every interval is independent in H."""
    colouring = lengths if isinstance(lengths, IntervalColouring) else IntervalColouring(tuple(lengths))
    return colouring.is_proper(H)


def iter_interval_colourings(H, r, allow_empty=False, params=None):
    """
    Stream the proper interval r-colourings of H in lexicographic order of their lengths.

    Parameters
    ----------
    H : OrderedGraph
    r : int
        Number of classes, at least 1.
    allow_empty : bool
        Whether classes of length zero are allowed.
    params : ParamsCore, optional
    """
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InputError(f"r must be a positive integer, got {r!r}")
    check_pattern_size(H, params)
    h = H.h
    shortest = 0 if allow_empty else 1
    lengths = []

    def extend(start, parts_left):
        remaining = h - start + 1
        if parts_left == 1:
            if remaining >= shortest and H.is_independent(start, h):
                yield tuple(lengths) + (remaining,)
            return
        longest = remaining - shortest * (parts_left - 1)
        for length in range(shortest, longest + 1):
            if length:
                v = start + length - 1
                if H.adj_mask(v) & interval_mask(start, v - 1):
                    break
            lengths.append(length)
            yield from extend(start + length, parts_left - 1)
            lengths.pop()

    for found in extend(1, r):
        yield IntervalColouring(found)


def enumerate_interval_colourings(H, r, allow_empty=False, params=None):
    """List form of :func:`iter_interval_colourings`."""
    return list(iter_interval_colourings(H, r, allow_empty, params))
