"""
H-covers: which host vertices lie in some copy of the pattern.
"""

from concurrent.futures import ThreadPoolExecutor

from ordtile.core.copies import has_copy
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.blocks import compress


def h_cover(G, H, params=None):
    """
    The vertices of G contained in no copy of H.

    Vertices of one block are interchangeable, so one anchored search per block
    decides the whole block.

    Returns
    -------
    frozenset of int
        Empty exactly when G has an H-cover.
    """
    params = params or ParamsTiling()
    if H.h > G.h:
        return frozenset(range(1, G.h + 1))
    blocks = compress(G)

    def covered(b):
        return has_copy(G, H, anchor=blocks.starts[b])

    if params.jobs > 1:
        with ThreadPoolExecutor(max_workers=params.jobs) as pool:
            flags = list(pool.map(covered, range(blocks.m)))
    else:
        flags = [covered(b) for b in range(blocks.m)]
    return frozenset(v for b, ok in enumerate(flags) if not ok for v in blocks.vertices(b))


def has_h_cover(G, H, params=None):
    return not h_cover(G, H, params)
