"""
Tiling certificates and search answers.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple


@dataclass(frozen=True)
class TilingWitness:
    """
    A list of host vertex sets, each spanning a copy of the pattern.

    Attributes
    ----------
    copies : tuple of tuple of int
        Every copy lists its host vertices in increasing order; vertex p-1 of the
        tuple receives pattern vertex p.
    """

    copies: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'copies', tuple(tuple(sorted(c)) for c in self.copies))

    def __len__(self):
        return len(self.copies)

    def covered(self):
        return frozenset(v for c in self.copies for v in c)

    def to_lists(self):
        return [list(c) for c in self.copies]


class TilingStatus(str, Enum):
    PERFECT_FOUND = 'PerfectFound'
    NO_PERFECT = 'NoPerfect'
    MAX_COVER = 'MaxCover'
    TARGET_UNREACHABLE = 'TargetUnreachable'
    TIMEOUT = 'Timeout'


@dataclass(frozen=True)
class TilingAnswer:
    """
    Result of one tiling search.

    Attributes
    ----------
    status : TilingStatus
    witness : TilingWitness or None
        Present for PerfectFound and MaxCover.
    nodes_explored : int
        Search nodes visited; deterministic for fixed inputs and budget.
    copies : int or None
        For MaxCover, the number of copies in the witness.
    """

    status: TilingStatus
    witness: Optional[TilingWitness] = None
    nodes_explored: int = 0
    copies: Optional[int] = None

    @property
    def covered(self):
        return 0 if self.witness is None else len(self.witness.covered())

    @property
    def timed_out(self):
        return self.status is TilingStatus.TIMEOUT

    def to_dict(self):
        doc = {"status": self.status.value,
               "copies": [] if self.witness is None else self.witness.to_lists(),
               "nodes": self.nodes_explored}
        if self.status is TilingStatus.MAX_COVER:
            doc["count"] = self.copies
        return doc


@dataclass(frozen=True)
class IntervalSegment:
    """
    A run of consecutive host vertices receiving a run of consecutive pattern vertices.

    Both ranges are inclusive and of equal length.
    """

    host_lo: int
    host_hi: int
    pattern_lo: int
    pattern_hi: int

    def __len__(self):
        return self.host_hi - self.host_lo + 1

    def to_list(self):
        return [self.host_lo, self.host_hi, self.pattern_lo, self.pattern_hi]
