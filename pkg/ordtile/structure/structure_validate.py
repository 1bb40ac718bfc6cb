# Exhaustive reference versions of the structural predicates, built only on the
# brute-force colouring enumeration of core_validate.

from ordtile.core.core_validate import brute_colourings, brute_interval_chromatic


def brute_barrier_holds(h, edges, i, j):
    # INPUT
    #  h, edges: the pattern; i, j: candidate class indices in [r+1]
    # OUTPUT
    #  Bool - whether every singleton-i colouring sends an edge from v into class j
    r = brute_interval_chromatic(h, edges)
    adj = {(min(u, v), max(u, v)) for u, v in edges}
    for lengths in brute_colourings(h, edges, r + 1, allow_empty=True):
        if lengths[i - 1] != 1:
            continue
        start = sum(lengths[:i - 1]) + 1
        lo = sum(lengths[:j - 1]) + 1
        hi = lo + lengths[j - 1] - 1
        if not any((min(start, w), max(start, w)) in adj for w in range(lo, hi + 1)):
            return False
    return True


def brute_fixed_prefix(h, edges):
    r = brute_interval_chromatic(h, edges)
    proper = brute_colourings(h, edges, r)
    return [i for i in range(1, r) if len({sum(c[:i]) for c in proper}) == 1]


def brute_flexible(h, edges):
    # x sits between class i and class i+1; both merges must be proper r-colourings
    r = brute_interval_chromatic(h, edges)
    proper = set(brute_colourings(h, edges, r))
    for i in range(1, r):
        ok = False
        for c in brute_colourings(h, edges, r + 1, allow_empty=True):
            if c[i] != 1:
                continue
            left = c[:i - 1] + (c[i - 1] + 1,) + c[i + 1:]
            right = c[:i] + (c[i + 1] + 1,) + c[i + 2:]
            if left in proper and right in proper:
                ok = True
                break
        if not ok:
            return False
    return True
