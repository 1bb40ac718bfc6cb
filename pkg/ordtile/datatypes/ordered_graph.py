"""
Ordered graphs, interval colourings and order-preserving embeddings.

The vertex labels of an OrderedGraph are exactly 1..h and the labelling is the
ordering. Adjacency is kept as one int bitset per vertex.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ordtile.datatypes.errors import InputError
from ordtile.functions.arg_type_check import method_arg_type_check
from ordtile.functions.bitsets import interval_mask, iter_bits, popcount


class OrderedGraph:
    """
    A vertex-ordered graph on [h].

    Instances are immutable and hashable. Equality compares the vertex count and
    the edge set.

    Attributes
    ----------
    h : int
        Number of vertices.
    edges : frozenset of tuple
        Pairs (u, v) with 1 <= u < v <= h.
    """

    __slots__ = ('h', 'edges', '_adj')

    def __init__(self, h: int, edges=()):
        """
        Parameters
        ----------
        h : int
            Number of vertices, at least 1.
        edges : iterable of pairs
            Each pair is normalised to (min, max). Repeats collapse.
        """
        method_arg_type_check(self.__init__, exclude=['edges'])
        if h < 1:
            raise InputError(f"an ordered graph needs at least one vertex, got h={h}")

        adj = [0] * (h + 1)
        normalised = set()
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise InputError(f"edge {edge!r} is not a pair") from None
            if isinstance(u, bool) or isinstance(v, bool) or not isinstance(u, (int, np.integer)) \
                    or not isinstance(v, (int, np.integer)):
                raise InputError(f"edge {edge!r} has non-integer endpoints")
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (1 <= u <= h and 1 <= v <= h):
                raise InputError(f"edge {edge!r} leaves the vertex range 1..{h}")
            u, v = min(u, v), max(u, v)
            normalised.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u

        object.__setattr__(self, 'h', h)
        object.__setattr__(self, 'edges', frozenset(normalised))
        object.__setattr__(self, '_adj', tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self.h == other.h and self.edges == other.edges

    def __hash__(self):
        return hash((self.h, self.edges))

    def __repr__(self):
        return f"OrderedGraph(h={self.h}, edges={sorted(self.edges)})"

    def __len__(self):
        return self.h

    def __getstate__(self):
        return (self.h, sorted(self.edges))

    def __setstate__(self, state):
        h, edges = state
        OrderedGraph.__init__(self, h, edges)

    # ---- constructors ---------------------------------------------------

    @classmethod
    def complete(cls, h):
        return cls(h, ((u, v) for u in range(1, h + 1) for v in range(u + 1, h + 1)))

    @classmethod
    def empty(cls, h):
        return cls(h, ())

    @classmethod
    def edge(cls):
        return cls(2, [(1, 2)])

    # ---- adjacency ----------------------------------------------------------

    def sorted_edges(self):
        return sorted(self.edges)

    def full_mask(self):
        return interval_mask(1, self.h)

    def adj_mask(self, v):
        return self._adj[v]

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def neighbours(self, v):
        return list(iter_bits(self._adj[v]))

    def degree(self, v):
        return popcount(self._adj[v])

    def degrees(self):
        """Degree vector indexed by vertex - 1."""
        return np.array([popcount(self._adj[v]) for v in range(1, self.h + 1)], dtype=np.int64)

    def min_degree(self):
        return int(self.degrees().min())

    def adjacency_matrix(self):
        """Dense 0/1 adjacency matrix; row and column v-1 belong to vertex v."""
        mat = np.zeros((self.h, self.h), dtype=np.int8)
        for u, v in self.edges:
            mat[u - 1, v - 1] = 1
            mat[v - 1, u - 1] = 1
        return mat

    def is_independent(self, lo, hi):
        """True when no edge has both endpoints in the interval lo..hi."""
        if hi <= lo:
            return True
        block = interval_mask(lo, hi)
        for v in range(lo, hi + 1):
            if self._adj[v] & block:
                return False
        return True

    def is_independent_mask(self, mask):
        for v in iter_bits(mask):
            if self._adj[v] & mask:
                return False
        return True

    # ---- derived graphs -------------------------------------------------------

    def induced(self, vertices):
        """The ordered subgraph induced by `vertices`, relabelled 1..k in order."""
        order = sorted(set(vertices))
        pos = {v: i + 1 for i, v in enumerate(order)}
        return OrderedGraph(len(order), ((pos[u], pos[v]) for u, v in self.edges
                                         if u in pos and v in pos))

    def add_edge(self, u, v):
        return OrderedGraph(self.h, list(self.edges) + [(u, v)])


@dataclass(frozen=True)
class IntervalColouring:
    """
    A composition of [h] into consecutive intervals.

    Attributes
    ----------
    lengths : tuple of int
        Interval k covers the positions following the (k-1)th prefix sum.
        Zero lengths denote empty classes.
    """

    lengths: Tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        if any(x < 0 for x in lengths):
            raise InputError(f"negative interval length in {lengths}")
        object.__setattr__(self, 'lengths', lengths)

    @property
    def r(self):
        return len(self.lengths)

    @property
    def h(self):
        return sum(self.lengths)

    def prefix(self, i):
        """Number of vertices in the first i intervals."""
        return sum(self.lengths[:i])

    def interval(self, k):
        """Bounds (lo, hi) of class k (1-based); hi < lo for an empty class."""
        lo = self.prefix(k - 1) + 1
        return lo, lo + self.lengths[k - 1] - 1

    def intervals(self):
        return [self.interval(k) for k in range(1, self.r + 1)]

    def class_mask(self, k):
        lo, hi = self.interval(k)
        return interval_mask(lo, hi)

    def class_of(self, v):
        for k, (lo, hi) in enumerate(self.intervals(), start=1):
            if lo <= v <= hi:
                return k
        raise InputError(f"vertex {v} outside 1..{self.h}")

    def is_proper(self, graph):
        if self.h != graph.h:
            return False
        return all(graph.is_independent(lo, hi) for lo, hi in self.intervals())

    def nonempty(self):
        return all(x > 0 for x in self.lengths)


@dataclass(frozen=True)
class Embedding:
    """
    An order-preserving injection of a pattern into a host.

    Attributes
    ----------
    images : tuple of int
        images[p-1] is the host vertex receiving pattern vertex p.
    """

    images: Tuple[int, ...]

    def vertex_set(self):
        return frozenset(self.images)

    def __len__(self):
        return len(self.images)
