# Helpers for vertex sets stored as Python int bitsets (bit v <-> vertex v).


def iter_bits(mask):
    """Yield the set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def interval_mask(lo, hi):
    """Bitset of the vertices lo..hi inclusive; empty when hi < lo."""
    if hi < lo:
        return 0
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


def mask_of(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask):
    return bin(mask).count('1')
