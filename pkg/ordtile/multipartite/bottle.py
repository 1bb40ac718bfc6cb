"""
Operations on complete multipartite graphs: critical chromatic number, orderings,
blow-ups and the bottle-shape normal form.
"""

from fractions import Fraction

from ordtile.datatypes.errors import InputError
from ordtile.datatypes.multipartite import CompleteMultipartite, OrderedMultipartite


def _as_unordered(B):
    if isinstance(B, OrderedMultipartite):
        return B.unordered()
    if isinstance(B, CompleteMultipartite):
        return B
    return CompleteMultipartite(B)


def crit_chrom(B):
    """
    (k-1)|B| / (|B| - smallest part) as an exact Fraction.

    Raises InputError for a single part, where the quantity is undefined.
    """
    return _as_unordered(B).crit_chrom()


def chromatic_number(B):
    return _as_unordered(B).k


def smallest_part(B):
    return _as_unordered(B).smallest_part()


def distinct_orderings(B):
    """One OrderedMultipartite per distinct size sequence, lexicographically."""
    return _as_unordered(B).orderings()


def blow_up(B, t):
    """
    Replace every vertex by t clones, keeping the part order.

    Parameters
    ----------
    B : OrderedMultipartite
    t : int
        At least 1.
    """
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InputError(f"blow-up factor must be a positive integer, got {t!r}")
    if not isinstance(B, OrderedMultipartite):
        B = OrderedMultipartite(B)
    return OrderedMultipartite(tuple(t * s for s in B.sizes_in_order))


def normalize_bottleshape(B):
    """
    One part of size (k-1)*min and k-1 parts of size |B|-min.

    The critical chromatic number is unchanged.
    """
    B = _as_unordered(B)
    if B.k < 2:
        raise InputError("the bottle shape needs at least two parts")
    small = B.smallest_part()
    shaped = CompleteMultipartite([(B.k - 1) * small] + [B.order - small] * (B.k - 1))
    if shaped.crit_chrom() != B.crit_chrom():
        raise AssertionError("normalisation changed the critical chromatic number")
    return shaped


def bottle_shape(k, m, s):
    """The shape (m, ..., m, s) with k parts."""
    if not 1 <= s <= m:
        raise InputError(f"need 1 <= s <= m, got m={m}, s={s}")
    return CompleteMultipartite([m] * (k - 1) + [s])


def is_bottle_shape(B):
    return _as_unordered(B).is_bottle_shaped()


def crit_chrom_of_shape(k, m, s):
    total = (k - 1) * m + s
    return Fraction((k - 1) * total, total - s)
