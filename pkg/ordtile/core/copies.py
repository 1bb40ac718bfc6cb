"""
Order-preserving, edge-preserving copies of a pattern inside a host.
"""

from ordtile.core.interval import check_pattern_size
from ordtile.datatypes.errors import InputError
from ordtile.datatypes.ordered_graph import Embedding
from ordtile.functions.bitsets import interval_mask, iter_bits


def enumerate_copies(G, H, anchor=None, params=None):
    """
    Stream every embedding of H into G, lexicographically by image tuple.

    The search walks the pattern vertices in label order. Candidate images for
    pattern vertex p lie strictly above the image of p-1, leave room for the
    remaining pattern vertices, and are adjacent to the images of all earlier
    neighbours of p.

    Parameters
    ----------
    G : OrderedGraph
        The host.
    H : OrderedGraph
        The pattern, with |H| <= |G|.
    anchor : int, optional
        When given, only embeddings whose image contains this host vertex.
    params : ParamsCore, optional

    Returns
    -------
    iterator of Embedding
        Input errors are raised here, before the first embedding is requested.
    """
    if H.h > G.h:
        raise InputError(f"pattern has {H.h} vertices but the host only {G.h}")
    if anchor is not None and not 1 <= anchor <= G.h:
        raise InputError(f"anchor {anchor} outside 1..{G.h}")
    check_pattern_size(H, params)
    return _embeddings(G, H, anchor)


def _embeddings(G, H, anchor):
    n, h = G.h, H.h
    back = [[q for q in H.neighbours(p) if q < p] for p in range(h + 1)]
    images = [0] * (h + 1)

    def place(p, prev):
        lo, hi = prev + 1, n - (h - p)
        if anchor is not None and prev < anchor:
            hi = min(hi, anchor)
            if p == h:
                lo = anchor
        candidates = interval_mask(lo, hi)
        for q in back[p]:
            candidates &= G.adj_mask(images[q])
        for c in iter_bits(candidates):
            images[p] = c
            if p == h:
                yield Embedding(tuple(images[1:]))
            else:
                yield from place(p + 1, c)

    yield from place(1, 0)


def has_copy(G, H, anchor=None, params=None):
    if H.h > G.h:
        return False
    return next(enumerate_copies(G, H, anchor, params), None) is not None


def count_copies(G, H, anchor=None, params=None):
    return sum(1 for _ in enumerate_copies(G, H, anchor, params))


def is_embedding(G, H, images):
    """Independent check that `images` is increasing and maps every H edge onto a G edge."""
    images = tuple(images)
    if len(images) != H.h:
        return False
    if any(not 1 <= v <= G.h for v in images):
        return False
    if any(a >= b for a, b in zip(images, images[1:])):
        return False
    return all(G.has_edge(images[u - 1], images[v - 1]) for u, v in H.edges)
