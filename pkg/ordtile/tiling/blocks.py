"""
Interval-twin compression of a host graph and the block profiles of a pattern.

Consecutive host vertices with identical neighbourhoods are pairwise non-adjacent
and interchangeable inside any copy of the pattern, so a copy is determined (up
to relabelling inside blocks) by how many pattern vertices it puts in each block.
"""

from dataclasses import dataclass
from typing import Tuple

from ordtile.functions.bitsets import interval_mask, iter_bits


@dataclass(frozen=True)
class BlockDecomposition:
    """
    Attributes
    ----------
    starts : tuple of int
        First host vertex of each block.
    sizes : tuple of int
        Number of vertices of each block.
    adjacency : tuple of int
        adjacency[b] is the bitset of blocks joined to block b.
    """

    starts: Tuple[int, ...]
    sizes: Tuple[int, ...]
    adjacency: Tuple[int, ...]

    @property
    def m(self):
        return len(self.sizes)

    def block_of(self, v):
        for b in range(self.m - 1, -1, -1):
            if self.starts[b] <= v:
                return b
        raise IndexError(v)

    def vertices(self, b):
        return range(self.starts[b], self.starts[b] + self.sizes[b])


def compress(G):
    """Split 1..n into maximal runs of vertices with equal adjacency bitsets."""
    starts, sizes = [], []
    for v in range(1, G.h + 1):
        if starts and G.adj_mask(v) == G.adj_mask(starts[-1]):
            sizes[-1] += 1
        else:
            starts.append(v)
            sizes.append(1)
    adjacency = []
    for a in range(len(starts)):
        mask = 0
        for b in range(len(starts)):
            if a != b and G.has_edge(starts[a], starts[b]):
                mask |= 1 << b
        adjacency.append(mask)
    return BlockDecomposition(tuple(starts), tuple(sizes), tuple(adjacency))


def block_profiles(blocks, H):
    """
    Every way to place H into the blocks.

    Pattern vertices go to blocks in a non-decreasing way. Pattern vertices sharing a
    block must be independent in H, and every edge of H must join two adjacent
    blocks.

    Returns
    -------
    list of tuple
        Each profile is a tuple of (block, count) pairs sorted by block. The list is
        ordered by first block, then lexicographically by assignment.
    """
    h, m = H.h, blocks.m
    back = [[q for q in H.neighbours(p) if q < p] for p in range(h + 1)]
    assign = [0] * (h + 1)
    profiles = []

    def finish():
        counts = {}
        for p in range(1, h + 1):
            counts[assign[p]] = counts.get(assign[p], 0) + 1
        profiles.append(tuple(sorted(counts.items())))

    def extend(p, prev, run_start):
        if p > h:
            finish()
            return
        allowed = interval_mask(prev if p > 1 else 0, m - 1)
        for q in back[p]:
            allowed &= blocks.adjacency[assign[q]]
        if p > 1:
            # a block is never adjacent to itself, so `allowed` keeps prev only when
            # no earlier neighbour of p already sits in it
            room = p - run_start < blocks.sizes[prev]
            if allowed >> prev & 1 and room and not H.adj_mask(p) & interval_mask(run_start, p - 1):
                assign[p] = prev
                extend(p + 1, prev, run_start)
            allowed &= ~(1 << prev)
        for b in iter_bits(allowed):
            assign[p] = b
            extend(p + 1, b, p)

    extend(1, 0, 1)
    return profiles
