"""
The extremal ordered graphs: a singleton class that no copy can reach (F1), a
complete multipartite graph just below the critical value (F2), a complete
multipartite graph with too few parts (F3), and the space barrier for the
complete 3-partite pattern with parts (l, 1, l).
"""

from dataclasses import dataclass
from fractions import Fraction

from ordtile.core.interval import interval_chromatic
from ordtile.datatypes.errors import InputError, UnsupportedInputError
from ordtile.datatypes.multipartite import CompleteMultipartite, OrderedMultipartite
from ordtile.datatypes.ordered_graph import OrderedGraph
from ordtile.functions.rationals import floor_fraction, parse_rational


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InputError(f"{name} must be a positive integer, got {value!r}")


def balanced_parts(n, k):
    """k sizes summing to n, differing by at most one, the larger ones last."""
    q, rem = divmod(n, k)
    return [q] * (k - rem) + [q + 1] * rem


def f1_classes(n, r, i, j):
    """
    Class sizes of F1(n, r, i, j), left to right.

    U_i is the singleton and |U_j| = floor((n-1)/r). The remaining r-1 classes get
    floor((n-1)/r) each, and the leftover vertices go one apiece to the last of them.
    """
    for name, value in (("n", n), ("r", r), ("i", i), ("j", j)):
        _positive_int(name, value)
    if r < 2:
        raise InputError(f"F1 needs r >= 2, got {r}")
    if i == j or not (1 <= i <= r + 1 and 1 <= j <= r + 1):
        raise InputError(f"need distinct i, j in 1..{r + 1}, got i={i}, j={j}")
    if n < r + 1:
        raise InputError(f"F1 needs n >= r + 1 = {r + 1}, got {n}")
    q, rem = divmod(n - 1, r)
    if q < 1:
        raise InputError(f"n = {n} leaves an empty class")
    sizes = [0] * (r + 1)
    sizes[i - 1] = 1
    sizes[j - 1] = q
    others = [k for k in range(r + 1) if k not in (i - 1, j - 1)]
    for pos, k in enumerate(others):
        sizes[k] = q + (1 if pos >= len(others) - rem else 0)
    return sizes


def f1_singleton(n, r, i, j):
    """The vertex u of the singleton class."""
    return sum(f1_classes(n, r, i, j)[:i - 1]) + 1


def build_F1(n, r, i, j):
    """
    F1(n, r, i, j): removing u leaves the complete r-partite ordered graph on the
    other classes, and u is joined to everything outside U_j.

    Returns
    -------
    OrderedGraph
    """
    sizes = f1_classes(n, r, i, j)
    bounds, lo = [], 1
    for s in sizes:
        bounds.append((lo, lo + s - 1))
        lo += s
    u = bounds[i - 1][0]
    part = {}
    for k, (a, b) in enumerate(bounds):
        for v in range(a, b + 1):
            part[v] = k
    edges = []
    for v in range(1, n + 1):
        for w in range(v + 1, n + 1):
            if v == u or w == u:
                other = w if v == u else v
                if part[other] != j - 1:
                    edges.append((v, w))
            elif part[v] != part[w]:
                edges.append((v, w))
    return OrderedGraph(n, edges)


def f2_ell(n, chi_star):
    """l = floor(n/χ* + 1)."""
    return floor_fraction(Fraction(n) / chi_star + 1)


def _exact_chi_star(chi_star):
    if hasattr(chi_star, "kind"):
        if not chi_star.is_exact:
            raise UnsupportedInputError("F2 needs an exact critical chromatic number, got an interval")
        return chi_star.value
    return parse_rational(chi_star)


def build_F2(H, n, chi_star):
    """
    F2(H, n): ceil(n/l) parts, all of size l except the last one.

    Parameters
    ----------
    H : OrderedGraph
        |H| must divide n.
    n : int
    chi_star : Fraction, str or ChiStarResult
        The exact χ*cr(H); an interval result is refused.

    Returns
    -------
    CompleteMultipartite
    """
    _positive_int("n", n)
    if n % H.h:
        raise InputError(f"|H| = {H.h} does not divide n = {n}")
    value = _exact_chi_star(chi_star)
    if value <= 1:
        raise InputError(f"χ*cr must exceed 1, got {value}")
    ell = f2_ell(n, value)
    k = -(-n // ell)
    return CompleteMultipartite([ell] * (k - 1) + [n - ell * (k - 1)])


def build_F3(H, n):
    """
    The complete (χ_<(H)-1)-partite ordered graph on n vertices with balanced parts
    (larger parts last).

    Returns
    -------
    OrderedGraph
    """
    _positive_int("n", n)
    r, _ = interval_chromatic(H)
    if r < 2:
        raise UnsupportedInputError("F3 needs χ_<(H) >= 2")
    if n < r - 1:
        raise InputError(f"F3 needs n >= {r - 1}, got {n}")
    return OrderedMultipartite(balanced_parts(n, r - 1)).to_graph()


def fourpart_parts(ell, n):
    """Parts (q+1, q+1, q+1, n-3q-3) with q = floor(n l² / (4l² - 1))."""
    _positive_int("ell", ell)
    _positive_int("n", n)
    q = (n * ell * ell) // (4 * ell * ell - 1)
    last = n - 3 * q - 3
    if last < 1:
        raise InputError(f"n = {n} is too small for the space barrier with l = {ell}")
    return (q + 1, q + 1, q + 1, last)


def build_fourpart(ell, n):
    """The complete 4-partite ordered space barrier for the parts (l, 1, l) pattern."""
    return OrderedMultipartite(fourpart_parts(ell, n))


def fourpart_pattern(ell):
    return OrderedMultipartite((ell, 1, ell)).to_graph()


@dataclass(frozen=True)
class CountingObstruction:
    """
    lhs > rhs rules out a perfect tiling: any perfect tiling has at least lhs copies
    but exactly rhs = n/(2l+1) of them.
    """

    lhs: Fraction
    rhs: Fraction

    def holds(self):
        return self.lhs > self.rhs

    def to_dict(self):
        return {"lhs": str(self.lhs), "rhs": str(self.rhs)}


def counting_obstruction_fourpart(ell, parts):
    """(l|G1| + l|G2| - |G1|) / l² against n / (2l + 1)."""
    parts = parts.sizes_in_order if isinstance(parts, OrderedMultipartite) else tuple(parts)
    n = sum(parts)
    lhs = Fraction(ell * parts[0] + ell * parts[1] - parts[0], ell * ell)
    return CountingObstruction(lhs, Fraction(n, 2 * ell + 1))
