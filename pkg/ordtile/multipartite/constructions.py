"""
Explicit perfect tilings of complete multipartite ordered graphs, assembled from
interval colourings of the pattern without running the search engine.
"""

from math import factorial

from ordtile.core.interval import enumerate_interval_colourings, interval_chromatic
from ordtile.datatypes.errors import InputError, InternalInconsistencyError, UnsupportedInputError
from ordtile.datatypes.multipartite import CompleteMultipartite, OrderedMultipartite
from ordtile.datatypes.witness import IntervalSegment, TilingWitness
from ordtile.multipartite.bottle import _as_unordered
from ordtile.structure.flexibility import is_flexible, merge_left, merge_right
from ordtile.tiling.verify import verify_interval_tiling, verify_tiling

MATERIALIZE_LIMIT = 5000


class IntervalTiler:
    """
    The perfect tiling of every ordering of the upper-bound bottlegraph.

    With an interval colouring H_1 < ... < H_r of H and t_i = (|H_1|+...+|H_i|)·h!,
    copy j (1 <= j <= h!) sends H_i onto host vertices
    t_{i-1}+(j-1)|H_i|+1 .. t_{i-1}+j|H_i|. Part boundaries of any ordering fall on
    multiples of h!, so no such interval straddles two parts, and two intervals of
    one copy are too far apart to share a part.

    Attributes
    ----------
    H : OrderedGraph
    colouring : IntervalColouring
        The colouring whose smallest class has size l+(H).
    B : CompleteMultipartite
    """

    def __init__(self, H, colouring, B):
        self.H = H
        self.colouring = colouring
        self.B = B
        self.scale = factorial(H.h)

    def _check_order(self, order):
        if not isinstance(order, OrderedMultipartite):
            order = OrderedMultipartite(order)
        if order.unordered() != self.B:
            raise InputError(f"{order.sizes_in_order} is not an ordering of {self.B.sizes}")
        return order

    def copies(self, order):
        """
        Yield each copy as a list of IntervalSegment, one per nonempty colour class.

        The intervals do not depend on the ordering; the ordering only decides
        which part every interval lands in.
        """
        self._check_order(order)
        offsets = []
        total = 0
        for length in self.colouring.lengths:
            offsets.append(total)
            total += length * self.scale
        for j in range(1, self.scale + 1):
            segments = []
            for k, length in enumerate(self.colouring.lengths, start=1):
                if not length:
                    continue
                lo = offsets[k - 1] + (j - 1) * length + 1
                p_lo, p_hi = self.colouring.interval(k)
                segments.append(IntervalSegment(lo, lo + length - 1, p_lo, p_hi))
            yield segments

    def verify(self, order):
        order = self._check_order(order)
        return verify_interval_tiling(order.sizes_in_order, self.H, self.copies(order))

    def materialize(self, order):
        """Vertex-level witness; only for |B| up to MATERIALIZE_LIMIT."""
        order = self._check_order(order)
        if order.order > MATERIALIZE_LIMIT:
            raise InputError(f"|B| = {order.order} is too large to materialise (limit {MATERIALIZE_LIMIT})")
        copies = []
        for segments in self.copies(order):
            images = []
            for seg in segments:
                images.extend(range(seg.host_lo, seg.host_hi + 1))
            copies.append(tuple(images))
        return TilingWitness(tuple(copies))


def upperbound_construction(H):
    """
    The simple bottlegraph behind the bound χ*cr(H) <= h/l+(H).

    B has floor(h/l+) parts of size l+·h! and one part of size (h - k·l+)·h!,
    dropped when empty.

    Returns
    -------
    B : CompleteMultipartite
    tiler : IntervalTiler
    """
    r, _ = interval_chromatic(H)
    colourings = enumerate_interval_colourings(H, r)
    ell_plus = max(min(c.lengths) for c in colourings)
    chosen = next(c for c in colourings if min(c.lengths) == ell_plus)
    scale = factorial(H.h)
    k = H.h // ell_plus
    parts = [ell_plus * scale] * k
    rest = (H.h - k * ell_plus) * scale
    if rest:
        parts.append(rest)
    B = CompleteMultipartite(parts)
    return B, IntervalTiler(H, chosen, B)


def _frame_colourings(H):
    flex = is_flexible(H)
    if not flex.flexible:
        raise UnsupportedInputError(f"pattern is not flexible (blocked at index {flex.blocking_index})")
    r, _ = interval_chromatic(H)
    return r, [(merge_left(c.lengths, i), merge_right(c.lengths, i))
               for i, c in enumerate(flex.witness, start=1)]


def frame_sizes(H):
    """
    Part sizes of the frame F: rh times the total size of the k-th classes over
    both merges of every flexible colouring. The first and last parts come out as
    rh plus 2rh times the classes without the moving vertex, the others as 2rh plus
    that sum.
    """
    r, pairs = _frame_colourings(H)
    h = H.h
    sizes = []
    for k in range(r):
        sizes.append(r * h * sum(left[k] + right[k] for left, right in pairs))
    return sizes


def _frame_copies(r, h, pairs, perturbation):
    # colourings for one frame whose part sizes are shifted by `perturbation`
    running = 0
    plan = []
    for i, (left, right) in enumerate(pairs, start=1):
        running += perturbation[i - 1]
        plan.extend([left] * (r * h + running))
        plan.extend([right] * (r * h - running))
    return plan


def _assemble(sizes, plan):
    cursors, start = [], 1
    for s in sizes:
        cursors.append(start)
        start += s
    copies = []
    for lengths in plan:
        images = []
        for k, length in enumerate(lengths):
            images.extend(range(cursors[k], cursors[k] + length))
            cursors[k] += length
        copies.append(tuple(images))
    return TilingWitness(tuple(copies))


def flexible_frame(H, perturbation=None, t=1):
    """
    The frame of a flexible pattern, perturbed, with an explicit perfect tiling.

    Two perturbation regimes are accepted:

    * sum(s) == 0 and |s_k| <= h: the parts are t|F_k| + s_k and the tiling uses
      t-1 unperturbed frames plus one frame shifted by s.
    * all s_k >= 0 and sum(s) == l·h with l <= t: t-l unperturbed frames, then l
      rounds of one copy on a fixed r-colouring Q plus a frame shifted by s' - |Q|,
      where s' takes h units greedily from what is left of s.

    Parameters
    ----------
    H : OrderedGraph
        A flexible pattern.
    perturbation : sequence of int, optional
        s_1..s_r; zeros when omitted.
    t : int
        Blow-up factor of the frame, at least 1.

    Returns
    -------
    F : OrderedMultipartite
    witness : TilingWitness
    """
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InputError(f"t must be a positive integer, got {t!r}")
    r, pairs = _frame_colourings(H)
    h = H.h
    s = [0] * r if perturbation is None else [int(x) for x in perturbation]
    if len(s) != r:
        raise InputError(f"perturbation needs {r} entries, got {len(s)}")
    base = frame_sizes(H)
    zero = [0] * r

    if sum(s) == 0 and all(abs(x) <= h for x in s):
        plan = []
        for _ in range(t - 1):
            plan.extend(_frame_copies(r, h, pairs, zero))
        plan.extend(_frame_copies(r, h, pairs, s))
    elif all(x >= 0 for x in s) and sum(s) % h == 0 and sum(s) // h <= t:
        rounds = sum(s) // h
        _, q = interval_chromatic(H)
        plan = []
        for _ in range(t - rounds):
            plan.extend(_frame_copies(r, h, pairs, zero))
        left = list(s)
        for _ in range(rounds):
            take, need = [], h
            for k in range(r):
                step = min(left[k], need)
                take.append(step)
                left[k] -= step
                need -= step
            plan.append(q.lengths)
            plan.extend(_frame_copies(r, h, pairs, [take[k] - q.lengths[k] for k in range(r)]))
    else:
        raise InputError(f"perturbation {tuple(s)} fits neither the balanced (sum 0, |s_k| <= h) "
                         f"nor the nonnegative (sum l*h with l <= t) regime")

    F = OrderedMultipartite(tuple(t * base[k] + s[k] for k in range(r)))
    witness = _assemble(F.sizes_in_order, plan)
    if not verify_tiling(F.to_graph(), H, witness, require_perfect=True):
        raise InternalInconsistencyError(f"frame tiling for perturbation {tuple(s)} failed verification")
    return F, witness
