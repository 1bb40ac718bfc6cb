"""
Certificate checks for tilings.

These functions only read edge sets and integer ranges; they do not touch the
search code or its bitset helpers.
"""

import logging

logger = logging.getLogger(__name__)


def verify_tiling(G, H, witness, require_perfect=False):
    """
    Check a TilingWitness against G and H.

    Every copy must hold |H| distinct host vertices, copies must be pairwise
    disjoint, and the i-th smallest vertex of a copy receives pattern vertex i with
    every H edge landing on a G edge. With `require_perfect`, the copies must also
    cover every vertex of G.

    Returns
    -------
    bool
    """
    g_edges = {(min(u, v), max(u, v)) for u, v in G.edges}
    seen = set()
    for copy in witness.copies:
        images = sorted(copy)
        if len(images) != H.h or len(set(images)) != H.h:
            logger.debug("copy %s has the wrong size", copy)
            return False
        if images[0] < 1 or images[-1] > G.h:
            logger.debug("copy %s leaves the host", copy)
            return False
        if seen.intersection(images):
            logger.debug("copy %s overlaps an earlier copy", copy)
            return False
        seen.update(images)
        for u, v in H.edges:
            a, b = images[u - 1], images[v - 1]
            if (min(a, b), max(a, b)) not in g_edges:
                logger.debug("copy %s misses the image of edge %s", copy, (u, v))
                return False
    if require_perfect and len(seen) != G.h:
        return False
    return True


def verify_interval_tiling(sizes, H, copies, require_perfect=True):
    """
    Check a symbolic tiling of the complete multipartite ordered graph with part
    sizes `sizes` (left to right).

    Each copy is a list of IntervalSegment. Within a copy, the pattern ranges must
    partition 1..h in the same order as the host ranges, each host range must sit
    inside one part, pattern vertices sharing a part must be independent in H,
    and every edge of H must join two different parts. The host ranges of all
    copies must be disjoint and, with `require_perfect`, cover 1..sum(sizes).

    Returns
    -------
    bool
    """
    bounds, lo = [], 1
    for s in sizes:
        bounds.append((lo, lo + s - 1))
        lo += s
    total = lo - 1

    def part_of(lo_v, hi_v):
        for idx, (a, b) in enumerate(bounds):
            if a <= lo_v and hi_v <= b:
                return idx
        return None

    used = []
    for copy in copies:
        segs = sorted(copy, key=lambda s: s.host_lo)
        expected = 1
        part = {}
        for seg in segs:
            if seg.host_hi < seg.host_lo or seg.host_hi - seg.host_lo != seg.pattern_hi - seg.pattern_lo:
                return False
            if seg.pattern_lo != expected:
                return False
            expected = seg.pattern_hi + 1
            idx = part_of(seg.host_lo, seg.host_hi)
            if idx is None:
                return False
            for p in range(seg.pattern_lo, seg.pattern_hi + 1):
                part[p] = idx
            used.append((seg.host_lo, seg.host_hi))
        if expected != H.h + 1:
            return False
        # pattern vertices in one part, possibly over several segments, must be independent
        if any(part[u] == part[v] for u, v in H.edges):
            return False

    used.sort()
    for (a_lo, a_hi), (b_lo, _) in zip(used, used[1:]):
        if b_lo <= a_hi:
            return False
    if require_perfect:
        if not used or used[0][0] != 1 or used[-1][1] != total:
            return False
        if any(b_lo != a_hi + 1 for (_, a_hi), (b_lo, _) in zip(used, used[1:])):
            return False
    elif used and (used[0][0] < 1 or used[-1][1] > total):
        return False
    return True
