"""
The minimum-degree coefficient f(x,H) for (x,H)-tilings as an exact piecewise
affine profile over x in (0, 1], with explicit gaps where only bounds are known.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ordtile.core.interval import enumerate_interval_colourings, interval_chromatic
from ordtile.critical.bounds import chi_star_bounds
from ordtile.critical.exact import complete_parts
from ordtile.critical.statistics import colouring_statistics
from ordtile.datatypes.errors import InputError, UnsupportedInputError
from ordtile.functions.rationals import parse_rational, qstr


def tj_x0(H):
    """
    T, J and x0 of a pattern with χ_<(H) = r >= 2.

    T is the largest, over class positions i, of the smallest |H_i| over proper
    interval r-colourings; J is the largest |H_i| over all of them; and
    x0 = h / ((r-1)J + T).

    Returns
    -------
    (int, int, Fraction)
    """
    r, _ = interval_chromatic(H)
    if r < 2:
        raise UnsupportedInputError("T, J and x0 need a pattern with at least one edge")
    colourings = [c.lengths for c in enumerate_interval_colourings(H, r)]
    T = max(min(c[i] for c in colourings) for i in range(r))
    J = max(max(c) for c in colourings)
    return T, J, Fraction(H.h, (r - 1) * J + T)


@dataclass(frozen=True)
class Piece:
    """
    f(x) = a + b*x on the interval from `x_from` to `x_to`.

    Attributes
    ----------
    x_from, x_to : Fraction
    from_closed, to_closed : bool
        Whether each endpoint belongs to the piece.
    a, b : Fraction
    source : str
        The formula family the piece comes from.
    """

    x_from: Fraction
    x_to: Fraction
    from_closed: bool
    to_closed: bool
    a: Fraction
    b: Fraction
    source: str

    def contains(self, x):
        above = x > self.x_from or (self.from_closed and x == self.x_from)
        below = x < self.x_to or (self.to_closed and x == self.x_to)
        return above and below

    def value(self, x):
        return self.a + self.b * x

    def formula(self):
        return f"{qstr(self.a)} + {qstr(self.b)}*x"

    def to_dict(self):
        return {"x_from": qstr(self.x_from), "x_to": qstr(self.x_to),
                "from_closed": self.from_closed, "to_closed": self.to_closed,
                "f": self.formula(), "source": self.source}


@dataclass(frozen=True)
class Gap:
    """
    An open x-range on which f is only bounded: lower <= f(x) <= upper, with
    `lower_strict` turning the left inequality strict.
    """

    x_from: Fraction
    x_to: Fraction
    lower: Fraction
    upper: Fraction
    lower_strict: bool = False

    def contains(self, x):
        return self.x_from < x < self.x_to

    def to_dict(self):
        return {"x_from": qstr(self.x_from), "x_to": qstr(self.x_to), "bounds_only": True,
                "lower": qstr(self.lower), "lower_strict": self.lower_strict,
                "upper": qstr(self.upper)}


@dataclass(frozen=True)
class FProfile:
    """
    Attributes
    ----------
    r : int
        χ_<(H).
    pieces : tuple of Piece
        Sorted by x, pairwise disjoint.
    gaps : tuple of Gap
    at_one : Fraction or None
        f(1, H) = 1 - 1/χ*cr(H) when known, used at x = 1 if no piece covers it.

    Methods
    -------
    evaluate(x):
        Exact f(x, H), or None inside a gap.
    """

    r: int
    pieces: Tuple[Piece, ...]
    gaps: Tuple[Gap, ...] = field(default_factory=tuple)
    at_one: Optional[Fraction] = None

    def evaluate(self, x):
        x = parse_rational(x)
        if not 0 < x <= 1:
            raise InputError(f"x must lie in (0, 1], got {x}")
        for piece in self.pieces:
            if piece.contains(x):
                return piece.value(x)
        if x == 1:
            return self.at_one
        return None

    def limit_at_zero(self):
        """The limit of f(x, H) as x tends to 0 from above."""
        first = self.pieces[0]
        return first.value(first.x_from) if first.x_from == 0 else None

    def breakpoints(self):
        """Interior endpoints of pieces and gaps, increasing."""
        points = set()
        for part in self.pieces + self.gaps:
            points.update((part.x_from, part.x_to))
        return sorted(p for p in points if 0 < p < 1)

    def to_dict(self):
        return {"r": self.r,
                "pieces": [p.to_dict() for p in self.pieces],
                "gaps": [g.to_dict() for g in self.gaps],
                "at_one": None if self.at_one is None else qstr(self.at_one)}


def _merge(pieces):
    merged = []
    for piece in pieces:
        if piece.x_from > piece.x_to or (piece.x_from == piece.x_to and
                                         not (piece.from_closed and piece.to_closed)):
            continue
        if merged:
            last = merged[-1]
            touching = last.x_to == piece.x_from and (last.to_closed or piece.from_closed)
            if touching and (last.a, last.b) == (piece.a, piece.b):
                source = last.source if last.source == piece.source else f"{last.source}+{piece.source}"
                merged[-1] = Piece(last.x_from, piece.x_to, last.from_closed, piece.to_closed,
                                   last.a, last.b, source)
                continue
        merged.append(piece)
    return tuple(merged)


def _sorted_complete_pieces(parts):
    """
    Pieces for the complete multipartite pattern with part sizes l_1 <= ... <= l_r.

    With y = (1-x)h/x and c_t = t*l_t - (l_1 + ... + l_t), the t-th formula holds
    for c_t <= y < c_{t+1}, which is x in (X_{t+1}, X_t] with X_t = h/(h + c_t);
    the last one holds for y >= c_r.
    """
    r, h = len(parts), sum(parts)
    prefix = [0]
    for size in parts:
        prefix.append(prefix[-1] + size)
    X = [None] + [Fraction(h, h + t * parts[t - 1] - prefix[t]) for t in range(1, r + 1)]
    pieces = []
    # by increasing x: the small-x formula first, then t = r-1 down to 1
    pieces.append(Piece(Fraction(0), X[r], False, True, 1 - Fraction(1, r - 1),
                        Fraction(parts[-1], h * (r - 1)), "pwlinear"))
    for t in range(r - 1, 0, -1):
        pieces.append(Piece(X[t + 1], X[t], False, True, 1 - Fraction(1, t),
                            Fraction(h - prefix[t], h * t), "pwlinear"))
    return _merge(pieces)


def _chi_star_upper(H, chi_star):
    if chi_star is None:
        return chi_star_bounds(H).upper, None
    if hasattr(chi_star, "kind"):
        return chi_star.upper, (chi_star.value if chi_star.is_exact else None)
    value = parse_rational(chi_star)
    return value, value


def f_profile(H, chi_star=None):
    """
    Assemble f(x, H) from the formula families that apply to H.

    - χ_<(H) = 2: f(x) = x(h - alpha)/h on (0, 1).
    - H complete multipartite with part sizes non-decreasing left to right: the
      piecewise system in the part sizes, on (0, 1].
    - otherwise: f(x) = 1 - (h - xT)/(h(r-1)) on (0, x0], then a gap up to 1
      bounded by f(x0) below and 1 - 1/χ*cr-upper above.

    Parameters
    ----------
    H : OrderedGraph
    chi_star : ChiStarResult, Fraction or str, optional
        Tightens the gap and supplies f(1, H). The general bounds are used when omitted.

    Returns
    -------
    FProfile
    """
    r, _ = interval_chromatic(H)
    h = H.h
    zero, one = Fraction(0), Fraction(1)
    if r == 1:
        return FProfile(r, (Piece(zero, one, False, True, zero, zero, "edgeless"),), (), zero)
    if r == 2:
        alpha = colouring_statistics(H).alpha
        slope = Fraction(h - alpha, h)
        return FProfile(r, (Piece(zero, one, False, False, zero, slope, "linear"),), (), slope)

    parts = complete_parts(H)
    if parts is not None and list(parts) == sorted(parts):
        return FProfile(r, _sorted_complete_pieces(list(parts)), (), 1 - Fraction(parts[0], h))

    T, _, x0 = tj_x0(H)
    a, b = 1 - Fraction(1, r - 1), Fraction(T, h * (r - 1))
    upper, exact = _chi_star_upper(H, chi_star)
    at_one = None if exact is None else 1 - 1 / exact
    if x0 >= 1:
        return FProfile(r, (Piece(zero, one, False, False, a, b, "linearresult"),), (), at_one)
    piece = Piece(zero, x0, False, True, a, b, "linearresult")
    gap = Gap(x0, one, piece.value(x0), 1 - 1 / upper)
    return FProfile(r, (piece,), (gap,), at_one)
