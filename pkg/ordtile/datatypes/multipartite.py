"""
Complete multipartite graphs, unordered (part-size multisets) and ordered
(part-size sequences realised as consecutive intervals).
"""

import re
from fractions import Fraction
from typing import Tuple

from ordtile.datatypes.errors import InputError
from ordtile.datatypes.ordered_graph import OrderedGraph
from ordtile.functions.multiset import multiset_permutations

_PARTS = re.compile(r"^\s*parts\s*:\s*(.*)$")


def _parse_sizes(text):
    lines = [ln.split('#', 1)[0].strip() for ln in str(text).splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise InputError("a multipartite description is a single line 'parts: s1 s2 ... sk'")
    match = _PARTS.match(lines[0])
    if match is None:
        raise InputError(f"expected 'parts: s1 s2 ... sk', got {lines[0]!r}")
    try:
        sizes = [int(tok) for tok in match.group(1).split()]
    except ValueError:
        raise InputError(f"part sizes must be integers: {lines[0]!r}") from None
    return sizes


def _check_sizes(sizes):
    sizes = tuple(sizes)
    if not sizes:
        raise InputError("a multipartite graph needs at least one part")
    for s in sizes:
        if isinstance(s, bool) or not isinstance(s, int):
            raise InputError(f"part size {s!r} is not an integer")
        if s < 1:
            raise InputError(f"part sizes must be positive, got {sizes}")
    return sizes


class CompleteMultipartite:
    """
    A complete k-partite unordered graph, stored by its part sizes sorted descending.

    Attributes
    ----------
    sizes : tuple of int
        Part sizes, largest first.
    """

    __slots__ = ('sizes',)

    def __init__(self, sizes):
        object.__setattr__(self, 'sizes', tuple(sorted(_check_sizes(sizes), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("CompleteMultipartite is immutable")

    def __eq__(self, other):
        return isinstance(other, CompleteMultipartite) and self.sizes == other.sizes

    def __hash__(self):
        return hash(('B', self.sizes))

    def __repr__(self):
        return f"CompleteMultipartite({self.sizes})"

    def __str__(self):
        return 'parts: ' + ' '.join(str(s) for s in self.sizes)

    def __getstate__(self):
        return self.sizes

    def __setstate__(self, state):
        object.__setattr__(self, 'sizes', tuple(state))

    @classmethod
    def parse(cls, text):
        return cls(_parse_sizes(text))

    @property
    def k(self):
        return len(self.sizes)

    @property
    def order(self):
        return sum(self.sizes)

    def __len__(self):
        return self.order

    def chromatic_number(self):
        return self.k

    def smallest_part(self):
        return self.sizes[-1]

    def is_balanced(self):
        return self.sizes[0] == self.sizes[-1]

    def is_bottle_shaped(self):
        """True for the (m, ..., m, s) shape with s <= m."""
        return all(s == self.sizes[0] for s in self.sizes[:-1])

    def crit_chrom(self):
        """(k-1)|B| / (|B| - smallest part), exact."""
        if self.k < 2:
            raise InputError("the critical chromatic number needs at least two parts")
        return Fraction((self.k - 1) * self.order, self.order - self.smallest_part())

    def orderings(self):
        """Distinct size sequences, lexicographically increasing."""
        return [OrderedMultipartite(seq) for seq in sorted(multiset_permutations(self.sizes))]


class OrderedMultipartite:
    """
    A complete multipartite ordered graph whose parts are consecutive intervals.

    Attributes
    ----------
    sizes_in_order : tuple of int
        Part sizes from left to right.
    """

    __slots__ = ('sizes_in_order',)

    def __init__(self, sizes_in_order):
        object.__setattr__(self, 'sizes_in_order', _check_sizes(sizes_in_order))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedMultipartite is immutable")

    def __eq__(self, other):
        return isinstance(other, OrderedMultipartite) and self.sizes_in_order == other.sizes_in_order

    def __hash__(self):
        return hash(('O', self.sizes_in_order))

    def __repr__(self):
        return f"OrderedMultipartite({self.sizes_in_order})"

    def __str__(self):
        return 'parts: ' + ' '.join(str(s) for s in self.sizes_in_order)

    def __getstate__(self):
        return self.sizes_in_order

    def __setstate__(self, state):
        object.__setattr__(self, 'sizes_in_order', tuple(state))

    @classmethod
    def parse(cls, text):
        return cls(_parse_sizes(text))

    @property
    def k(self):
        return len(self.sizes_in_order)

    @property
    def order(self):
        return sum(self.sizes_in_order)

    def __len__(self):
        return self.order

    def unordered(self):
        return CompleteMultipartite(self.sizes_in_order)

    def part_bounds(self):
        """Inclusive vertex ranges (lo, hi) of the parts, left to right."""
        bounds, lo = [], 1
        for s in self.sizes_in_order:
            bounds.append((lo, lo + s - 1))
            lo += s
        return bounds

    def part_of(self, v):
        for idx, (lo, hi) in enumerate(self.part_bounds()):
            if lo <= v <= hi:
                return idx
        raise InputError(f"vertex {v} outside 1..{self.order}")

    def to_graph(self):
        """The realised ordered graph: all cross-part pairs adjacent, parts independent."""
        bounds = self.part_bounds()
        edges = []
        for a, (lo_a, hi_a) in enumerate(bounds):
            for lo_b, hi_b in bounds[a + 1:]:
                for u in range(lo_a, hi_a + 1):
                    for v in range(lo_b, hi_b + 1):
                        edges.append((u, v))
        return OrderedGraph(self.order, edges)
