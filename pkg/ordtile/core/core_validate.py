# Brute-force reference versions of the ordered-graph primitives.
#
# Nothing here shares code with interval.py or copies.py: every answer is
# recomputed from the edge list by exhaustive enumeration. Only for small inputs.

from itertools import combinations


def _compositions(h, r, allow_empty):
    # INPUT
    #  h: Int - total, r: Int - number of parts, allow_empty: Bool
    # OUTPUT
    #  every composition of h into r parts, lexicographic
    if r == 1:
        if h >= (0 if allow_empty else 1):
            yield (h,)
        return
    for first in range(0 if allow_empty else 1, h + 1):
        for rest in _compositions(h - first, r - 1, allow_empty):
            yield (first,) + rest


def _proper(edges, lengths):
    cls = {}
    v = 1
    for k, length in enumerate(lengths):
        for _ in range(length):
            cls[v] = k
            v += 1
    return all(cls[u] != cls[w] for u, w in edges)


def brute_colourings(h, edges, r, allow_empty=False):
    return [c for c in _compositions(h, r, allow_empty) if _proper(edges, c)]


def brute_interval_chromatic(h, edges):
    for r in range(1, h + 1):
        if brute_colourings(h, edges, r):
            return r
    return h


def brute_copies(n, g_edges, h, h_edges, anchor=None):
    # INPUT
    #  n, g_edges: host size and edge list; h, h_edges: pattern size and edge list
    #  anchor: Int or None - vertex every image must contain
    # OUTPUT
    #  sorted list of image tuples
    g_set = {(min(u, v), max(u, v)) for u, v in g_edges}
    found = []
    for images in combinations(range(1, n + 1), h):
        if anchor is not None and anchor not in images:
            continue
        if all((images[u - 1], images[v - 1]) in g_set for u, v in h_edges):
            found.append(images)
    return found
