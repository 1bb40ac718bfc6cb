"""
Named ordered graphs used throughout the package and its tests, and the hosts
from the constructions behind the f(x,H) formulas.
"""

from fractions import Fraction

from ordtile.core.interval import enumerate_interval_colourings, interval_chromatic
from ordtile.critical.statistics import colouring_statistics
from ordtile.datatypes.errors import InputError, UnsupportedInputError
from ordtile.datatypes.multipartite import CompleteMultipartite, OrderedMultipartite
from ordtile.datatypes.ordered_graph import OrderedGraph
from ordtile.functions.rationals import ceil_fraction, floor_fraction, parse_rational
from ordtile.partial.profile import tj_x0
from ordtile.structure.flexibility import fixed_prefix_indices


def long_edge11():
    """χ_< = 4: the path 2-5-8-11 plus the long edge 1-11."""
    return OrderedGraph(11, [(1, 11), (2, 5), (5, 8), (8, 11)])


def skip_path7():
    """The path 1-3-5-7, with χ_< = 4 and χ*cr = 7/2."""
    return OrderedGraph(7, [(1, 3), (3, 5), (5, 7)])


def barrier8():
    """χ_< = 3 with a local barrier; (3,3,2) is a simple bottlegraph."""
    return OrderedGraph(8, [(1, 8), (2, 5), (5, 8)])


def path5():
    """The path 1-3-5: χ_< = 3, χ*cr = 5/2, flexible, no local barrier."""
    return OrderedGraph(5, [(1, 3), (3, 5)])


def K22():
    """Interval-labelled K_{2,2}: parts {1,2} < {3,4}."""
    return complete_multipartite((2, 2))


def complete_multipartite(sizes):
    return OrderedMultipartite(sizes).to_graph()


def ordered_complete(h):
    return OrderedGraph.complete(h)


FIXTURES = {
    "long_edge11": long_edge11,
    "skip_path7": skip_path7,
    "barrier8": barrier8,
    "path5": path5,
    "K22": K22,
}


def _rational_x(x):
    x = parse_rational(x)
    if not 0 < x <= 1:
        raise InputError(f"x must lie in (0, 1], got {x}")
    return x


def _positive(N):
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise InputError(f"N must be a positive integer, got {N!r}")


def gen_linear_construction(H, x, N):
    """
    Host D1 < D2 < D3 < D4 for a pattern with χ_<(H) = 2, holding N disjoint copies
    of H inside D1, D2 and D4 and therefore an (x,H)-tiling.

    |D1| = (h - alpha_minus)N, |D2| = (alpha_plus + alpha_minus - h)N,
    |D3| = floor((1-x)Nh/x), |D4| = (h - alpha_plus)N; D1 and D4 are completely
    joined and every other vertex is isolated.

    Returns
    -------
    OrderedGraph
    """
    x = _rational_x(x)
    _positive(N)
    stats = colouring_statistics(H)
    if stats.r != 2:
        raise UnsupportedInputError(f"the linear construction needs χ_<(H) = 2, got {stats.r}")
    h = H.h
    d1 = (h - stats.alpha_minus) * N
    d2 = (stats.alpha_plus + stats.alpha_minus - h) * N
    d3 = floor_fraction((1 - x) * N * h / x)
    d4 = (h - stats.alpha_plus) * N
    total = d1 + d2 + d3 + d4
    edges = [(u, v) for u in range(1, d1 + 1) for v in range(total - d4 + 1, total + 1)]
    return OrderedGraph(total, edges)


def gen_linear_obstruction(H, x, N):
    """
    Ordered graph with no (x,H)-tiling for a pattern with χ_<(H) = 2: a large
    independent side U against a clique V of N(h - alpha) - 1 vertices.

    U comes first when alpha = alpha_plus and last otherwise, and
    |U| = N*alpha + ceil((1-x)Nh/x) + 1.

    Returns
    -------
    OrderedGraph
    """
    x = _rational_x(x)
    _positive(N)
    stats = colouring_statistics(H)
    if stats.r != 2:
        raise UnsupportedInputError(f"the linear obstruction needs χ_<(H) = 2, got {stats.r}")
    h, alpha = H.h, stats.alpha
    u_size = N * alpha + ceil_fraction((1 - x) * N * h / x) + 1
    v_size = N * (h - alpha) - 1
    if v_size < 1:
        raise InputError(f"N = {N} leaves the clique side empty")
    n = u_size + v_size
    if alpha == stats.alpha_plus:
        U, V = range(1, u_size + 1), range(u_size + 1, n + 1)
    else:
        V, U = range(1, v_size + 1), range(v_size + 1, n + 1)
    edges = [(min(u, v), max(u, v)) for u in U for v in V]
    edges += [(a, b) for a in V for b in V if a < b]
    return OrderedGraph(n, edges)


def gen_linearresult_host(H, x, N):
    """
    The x-bottlegraph for x <= x0: |B_1| = N*T and r-1 further parts of
    floor(N/(r-1) * (h/x - T)).

    Returns
    -------
    CompleteMultipartite
    """
    x = _rational_x(x)
    _positive(N)
    r, _ = interval_chromatic(H)
    T, _, x0 = tj_x0(H)
    if x > x0:
        raise InputError(f"x = {x} exceeds x0 = {x0}")
    other = floor_fraction(Fraction(N, r - 1) * (Fraction(H.h) / x - T))
    return CompleteMultipartite([N * T] + [other] * (r - 1))


def gen_pwlinear_host(parts, x, N):
    """
    Complete r-partite ordered host for part sizes l_1 <= ... <= l_r whose x lies
    in the t-th range: the first t parts have floor(N/t * ((1-x)h/x + l_1 + ... + l_t))
    vertices and part i > t has N*l_i. It holds N disjoint copies of the pattern,
    which form an (x,H)-tiling.

    Returns
    -------
    OrderedMultipartite
    """
    parts = list(parts)
    if parts != sorted(parts) or not parts or min(parts) < 1:
        raise InputError(f"part sizes must be positive and non-decreasing, got {parts}")
    x = _rational_x(x)
    _positive(N)
    r, h = len(parts), sum(parts)
    y = (1 - x) * h / x
    prefix = [0]
    for size in parts:
        prefix.append(prefix[-1] + size)
    c = [None] + [t * parts[t - 1] - prefix[t] for t in range(1, r + 1)]
    for t in range(1, r):
        if c[t] <= y < c[t + 1]:
            first = floor_fraction(Fraction(N, t) * (y + prefix[t]))
            return OrderedMultipartite([first] * t + [N * size for size in parts[t:]])
    raise InputError(f"x = {x} lies in the small-x range; use gen_linearresult_host")


def gen_near_balanced(H, n, eta):
    """
    Complete r-partite ordered graph for a non-flexible pattern whose tilings all
    miss eta*n vertices.

    r-1 parts of (n/r)(1-eta) and one of (n/r)(1+(r-1)eta). The large part is
    last when the fixed prefix holds at least ih/r vertices, and first otherwise.

    Returns
    -------
    OrderedMultipartite
    """
    eta = parse_rational(eta)
    if not 0 < eta < 1:
        raise InputError(f"eta must lie in (0, 1), got {eta}")
    fixed = fixed_prefix_indices(H)
    if not fixed:
        raise UnsupportedInputError("the near-balanced construction needs a non-flexible pattern")
    r, _ = interval_chromatic(H)
    if n % r or (eta * n / r).denominator != 1:
        raise InputError(f"n/r and eta*n/r must be integers, got n = {n}, eta = {eta}")
    i = fixed[0]
    prefix = sum(enumerate_interval_colourings(H, r)[0].lengths[:i])
    small = int(Fraction(n, r) * (1 - eta))
    large = int(Fraction(n, r) * (1 + (r - 1) * eta))
    if prefix * r >= i * H.h:
        return OrderedMultipartite([small] * (r - 1) + [large])
    return OrderedMultipartite([large] + [small] * (r - 1))
