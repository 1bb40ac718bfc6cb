"""
Exact search for H-tilings over block count vectors.
"""

import logging
import sys
import threading
from contextlib import contextmanager
from fractions import Fraction

from ordtile.core.interval import check_pattern_size
from ordtile.datatypes.errors import InputError
from ordtile.datatypes.witness import TilingAnswer, TilingStatus, TilingWitness
from ordtile.functions.rationals import ceil_fraction, parse_rational
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.blocks import block_profiles, compress

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


_RECURSION_LOCK = threading.Lock()
_recursion_users = 0
_saved_limit = None


@contextmanager
def _recursion_room(limit):
    """Raise the interpreter recursion limit to `limit` while searches run, then restore it."""
    global _recursion_users, _saved_limit
    with _RECURSION_LOCK:
        if _recursion_users == 0:
            _saved_limit = sys.getrecursionlimit()
        _recursion_users += 1
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        with _RECURSION_LOCK:
            _recursion_users -= 1
            if _recursion_users == 0:
                sys.setrecursionlimit(_saved_limit)
                _saved_limit = None


class TilingEngine:
    """
    Backtracking search for vertex-disjoint copies of H in G.

    The host is compressed into blocks of interchangeable vertices. A state is the
    vector of uncovered vertices per block; the search branches on the first block
    that still has uncovered vertices, either placing a copy whose lowest vertex
    lies there or, when spare vertices remain, leaving one of its vertices
    uncovered. Dead states are remembered with the least number of copies shown to
    be impossible from them.

    Attributes
    ----------
    G : OrderedGraph
        Host graph.
    H : OrderedGraph
        Pattern graph.
    params : ParamsTiling
        Search limits.
    blocks : BlockDecomposition
        The interval-twin blocks of G.
    nodes : int
        Nodes visited so far, over all searches run by this engine.

    Methods
    -------
    search(need):
        Find `need` disjoint copies, returning the witness or None.
    """

    def __init__(self, G, H, params=None):
        self.G = G
        self.H = H
        self.params = params or ParamsTiling()
        check_pattern_size(H)
        self.blocks = compress(G)
        self.nodes = 0
        self._memo = {}
        self._actions = []

        self._by_first = [[] for _ in range(self.blocks.m)]
        for prof in block_profiles(self.blocks, H):
            self._by_first[prof[0][0]].append(prof)
        logger.debug("host with %d vertices compressed to %d blocks, %d profiles",
                     G.h, self.blocks.m, sum(len(p) for p in self._by_first))

    def _fits(self, profile, counts):
        return all(counts[b] >= c for b, c in profile)

    def _uncoverable(self, counts):
        covered = 0
        for first in self._by_first:
            for prof in first:
                if self._fits(prof, counts):
                    for b, _ in prof:
                        covered |= 1 << b
        return sum(c for b, c in enumerate(counts) if c and not covered >> b & 1)

    def _remember(self, key, need):
        old = self._memo.get(key)
        if old is not None:
            if need < old:
                self._memo[key] = need
        elif len(self._memo) < self.params.memo_limit:
            self._memo[key] = need

    def _search(self, counts, remaining, need, depth):
        self.nodes += 1
        if self.nodes > self.params.budget:
            raise _BudgetExhausted()
        if need == 0:
            return True
        slack = remaining - self.H.h * need
        if slack < 0:
            return False
        key = tuple(counts)
        failing = self._memo.get(key)
        if failing is not None and need >= failing:
            return False
        if depth <= self.params.feasibility_depth and self._uncoverable(counts) > slack:
            self._remember(key, need)
            return False

        b = next(i for i, c in enumerate(counts) if c)
        for prof in self._by_first[b]:
            if not self._fits(prof, counts):
                continue
            for blk, c in prof:
                counts[blk] -= c
            self._actions.append(('copy', prof))
            if self._search(counts, remaining - self.H.h, need - 1, depth + 1):
                return True
            self._actions.pop()
            for blk, c in prof:
                counts[blk] += c

        if slack > 0:
            counts[b] -= 1
            self._actions.append(('skip', b))
            if self._search(counts, remaining - 1, need, depth + 1):
                return True
            self._actions.pop()
            counts[b] += 1

        self._remember(key, need)
        return False

    def _assemble(self):
        cursor = list(self.blocks.starts)
        copies = []
        for kind, item in self._actions:
            if kind == 'skip':
                cursor[item] += 1
                continue
            images = []
            for blk, c in item:
                images.extend(range(cursor[blk], cursor[blk] + c))
                cursor[blk] += c
            copies.append(tuple(images))
        return TilingWitness(tuple(copies))

    def search(self, need):
        """
        Parameters
        ----------
        need : int
            Number of disjoint copies required.

        Returns
        -------
        TilingWitness or None
            None when `need` copies are impossible. Raises _BudgetExhausted when the
            node budget runs out.
        """
        self._actions = []
        if need == 0:
            return TilingWitness(())
        if self.blocks.m == 0 or need * self.H.h > self.G.h:
            return None
        counts = list(self.blocks.sizes)
        # each state uses one stack frame per action
        with _recursion_room(2 * self.G.h + 200):
            found = self._search(counts, self.G.h, need, 0)
        return self._assemble() if found else None


def _params_with_budget(params, budget):
    params = params or ParamsTiling()
    if budget is not None:
        params = params.replace(budget=budget)
    return params


def perfect_tiling(G, H, budget=None, params=None):
    """
    Search for a perfect H-tiling of G.

    Parameters
    ----------
    G, H : OrderedGraph
    budget : int, optional
        Overrides the node budget of `params`.
    params : ParamsTiling, optional

    Returns
    -------
    TilingAnswer
        PerfectFound, NoPerfect or Timeout.
    """
    params = _params_with_budget(params, budget)
    if G.h % H.h:
        return TilingAnswer(TilingStatus.NO_PERFECT, None, 0)
    engine = TilingEngine(G, H, params)
    try:
        witness = engine.search(G.h // H.h)
    except _BudgetExhausted:
        logger.warning("perfect tiling search stopped after %d nodes", params.budget)
        return TilingAnswer(TilingStatus.TIMEOUT, None, engine.nodes)
    if witness is None:
        return TilingAnswer(TilingStatus.NO_PERFECT, None, engine.nodes)
    return TilingAnswer(TilingStatus.PERFECT_FOUND, witness, engine.nodes, len(witness))


def max_tiling(G, H, target=None, budget=None, params=None):
    """
    Largest H-tiling of G, or the decision whether `target` copies fit.

    Without a target the copy count is raised one at a time until it fails, so the
    reported MaxCover is exact. A Timeout answer carries the best witness found so far.

    Returns
    -------
    TilingAnswer
        MaxCover (with `copies`), TargetUnreachable or Timeout.
    """
    params = _params_with_budget(params, budget)
    ceiling = G.h // H.h
    if target is not None:
        if isinstance(target, bool) or not isinstance(target, int) or target < 0:
            raise InputError(f"target must be a non-negative integer, got {target!r}")
        if target > ceiling:
            raise InputError(f"target {target} exceeds floor(|G|/|H|) = {ceiling}")

    engine = TilingEngine(G, H, params)
    best = TilingWitness(())
    try:
        if target is not None:
            witness = engine.search(target)
            if witness is None:
                return TilingAnswer(TilingStatus.TARGET_UNREACHABLE, None, engine.nodes)
            return TilingAnswer(TilingStatus.MAX_COVER, witness, engine.nodes, len(witness))
        for need in range(1, ceiling + 1):
            witness = engine.search(need)
            if witness is None:
                break
            best = witness
            logger.debug("found %d disjoint copies after %d nodes", need, engine.nodes)
    except _BudgetExhausted:
        logger.warning("maximum tiling search stopped after %d nodes", params.budget)
        return TilingAnswer(TilingStatus.TIMEOUT, best, engine.nodes, len(best))
    return TilingAnswer(TilingStatus.MAX_COVER, best, engine.nodes, len(best))


def x_target(n, h, x):
    """Copies needed to cover at least x*n vertices: ceil(ceil(x*n) / h)."""
    return ceil_fraction(Fraction(ceil_fraction(x * n), h))


def x_tiling(G, H, x, budget=None, params=None):
    """
    Decide whether G has an (x,H)-tiling, one covering at least x|G| vertices.

    Parameters
    ----------
    x : Fraction or str
        Rational in [0, 1].
    """
    x = parse_rational(x)
    if not 0 <= x <= 1:
        raise InputError(f"x must lie in [0, 1], got {x}")
    target = x_target(G.h, H.h, x)
    if target > G.h // H.h:
        return TilingAnswer(TilingStatus.TARGET_UNREACHABLE, None, 0)
    return max_tiling(G, H, target, budget, params)
