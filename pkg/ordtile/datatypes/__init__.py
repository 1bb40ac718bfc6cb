from .errors import (OrdtileError, InputError, UnsupportedInputError, ContradictionError,
                     InconclusiveError, InternalInconsistencyError)
from .AbstractParams import AbstractParams, ParamsCore
from .ordered_graph import OrderedGraph, IntervalColouring, Embedding
from .multipartite import CompleteMultipartite, OrderedMultipartite
from .witness import TilingWitness, TilingStatus, TilingAnswer, IntervalSegment
from .outputs import SearchStats
