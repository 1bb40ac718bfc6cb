# Naive tiling oracles: list every copy of H in G with itertools, then search
# copy sets directly on vertex sets. Only for hosts of about ten vertices.

from itertools import combinations


def _all_copies(G, H):
    g_edges = {(min(u, v), max(u, v)) for u, v in G.edges}
    return [frozenset(images) for images in combinations(range(1, G.h + 1), H.h)
            if all((images[u - 1], images[v - 1]) in g_edges for u, v in H.edges)]


def naive_perfect(G, H):
    # INPUT
    #  G, H: OrderedGraph
    # OUTPUT
    #  Bool - whether some set of copies covers every vertex exactly once
    if G.h % H.h:
        return False
    copies = _all_copies(G, H)

    def solve(uncovered):
        if not uncovered:
            return True
        v = min(uncovered)
        return any(solve(uncovered - c) for c in copies if v in c and c <= uncovered)

    return solve(frozenset(range(1, G.h + 1)))


def naive_max(G, H):
    # OUTPUT
    #  Int - largest number of pairwise disjoint copies
    copies = _all_copies(G, H)
    best = 0

    def grow(start, used, count):
        nonlocal best
        best = max(best, count)
        for idx in range(start, len(copies)):
            if not copies[idx] & used:
                grow(idx + 1, used | copies[idx], count + 1)

    grow(0, frozenset(), 0)
    return best


def naive_uncovered(G, H):
    covered = set()
    for c in _all_copies(G, H):
        covered |= c
    return frozenset(range(1, G.h + 1)) - covered
