"""
Simple bottlegraphs attaining the critical value for complete 3-partite and
interval-bipartite patterns.
"""

from fractions import Fraction
from math import factorial, floor

from ordtile.core.interval import interval_chromatic
from ordtile.critical.statistics import colouring_statistics, g_value
from ordtile.datatypes.errors import InputError, UnsupportedInputError
from ordtile.datatypes.multipartite import CompleteMultipartite


def comp3partite_bottle(h1, h2, h3):
    """
    A simple bottlegraph of the complete 3-partite ordered graph with consecutive
    parts of sizes h1, h2, h3 whose critical chromatic number is g(h1, h2, h3).

    With a = min(h1, h3):

    * h2 >= a: the smallest part sits at an end and the upper-bound shape
      (floor(h/a) parts of a·h!, remainder part of (h mod a)·h!) is used;
    * h1 == h3: (a², a², a², a² - h2²);
    * g integer: g parts of a²;
    * otherwise k = floor(g) parts of size P and one of size P·(g-k) for a
      suitable P.

    Returns
    -------
    CompleteMultipartite
    """
    g = g_value(h1, h2, h3)
    a, c = min(h1, h3), max(h1, h3)
    h = h1 + h2 + h3
    if h2 >= a:
        scale = factorial(h)
        parts = [a * scale] * (h // a)
        if h % a:
            parts.append((h % a) * scale)
        return CompleteMultipartite(parts)
    if a == c:
        return CompleteMultipartite([a * a] * 3 + [a * a - h2 * h2])
    if g.denominator == 1:
        return CompleteMultipartite([a * a] * int(g))

    k = floor(g)
    frac = g - k
    if g >= 4:
        ratio = frac * a / (2 - Fraction(h2, a))
        t, s = ratio.denominator, 0
    else:
        t, s = 1, a * a - h2 * h2
    u = 1 - frac
    v = frac - Fraction(s, a * a)
    if v == 0:
        wa, wb = 0, 1
    else:
        weight = v / u
        wa, wb = weight.numerator, weight.denominator
    unit = (wa + wb) * (t * a) ** 2
    small = unit * frac
    if small.denominator != 1:
        raise AssertionError(f"non-integral small part {small} for {(h1, h2, h3)}")
    return CompleteMultipartite([unit] * k + [int(small)])


def bipartite_bottle(H):
    """
    K_{alpha, h-alpha} for a pattern with interval chromatic number 2.

    It is a simple bottlegraph when 2·alpha >= h, since [1, alpha] < [alpha+1, h]
    and [1, h-alpha] < [h-alpha+1, h] are then both interval 2-colourings. Smaller
    alpha raises UnsupportedInputError; upperbound_construction covers that case.
    """
    r, _ = interval_chromatic(H)
    if r != 2:
        raise UnsupportedInputError(f"bipartite_bottle needs χ_<(H) = 2, got {r}")
    alpha = colouring_statistics(H).alpha
    if alpha == H.h:
        raise InputError("pattern has no edges")
    if 2 * alpha < H.h:
        raise UnsupportedInputError(f"K_(alpha, h-alpha) needs 2·alpha >= h, got alpha = {alpha}, h = {H.h}; "
                                    f"use upperbound_construction")
    return CompleteMultipartite([alpha, H.h - alpha])
