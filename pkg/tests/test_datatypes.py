import pickle
from fractions import Fraction

import numpy as np
import pytest

from ordtile.datatypes import (AbstractParams, CompleteMultipartite, InputError, IntervalColouring,
                               OrderedGraph, OrderedMultipartite, SearchStats, TilingAnswer,
                               TilingStatus, TilingWitness)
from ordtile.tiling import ParamsTiling


class TestOrderedGraph:
    def test_edges_are_normalised(self):
        G = OrderedGraph(4, [(3, 1), (1, 3), (2, 4)])
        assert G.sorted_edges() == [(1, 3), (2, 4)]
        assert G.has_edge(3, 1)
        assert not G.has_edge(1, 2)

    @pytest.mark.parametrize("h, edges", [
        (0, []),
        (3, [(1, 1)]),
        (3, [(1, 4)]),
        (3, [(1,)]),
        (3, [(1.0, 2)]),
    ])
    def test_rejects_malformed(self, h, edges):
        with pytest.raises(InputError):
            OrderedGraph(h, edges)

    def test_rejects_non_integer_h(self):
        with pytest.raises(InputError):
            OrderedGraph("3")
        with pytest.raises(InputError):
            OrderedGraph(True)

    def test_degrees_and_matrix(self):
        G = OrderedGraph(4, [(1, 2), (1, 3), (1, 4)])
        assert G.degree(1) == 3
        assert G.min_degree() == 1
        assert G.neighbours(1) == [2, 3, 4]
        mat = G.adjacency_matrix()
        assert mat.shape == (4, 4)
        assert np.array_equal(mat, mat.T)
        assert int(mat.sum()) == 6

    def test_independent_intervals(self):
        G = OrderedGraph(5, [(1, 3), (3, 5)])
        assert G.is_independent(1, 2)
        assert not G.is_independent(1, 3)
        assert G.is_independent(4, 5)
        assert G.is_independent(3, 3)

    def test_induced_relabels_in_order(self):
        G = OrderedGraph(5, [(1, 3), (3, 5), (2, 4)])
        assert G.induced([1, 3, 5]) == OrderedGraph(3, [(1, 2), (2, 3)])

    def test_immutable_and_hashable(self):
        G = OrderedGraph.complete(3)
        with pytest.raises(AttributeError):
            G.h = 4
        assert len({G, OrderedGraph(3, [(1, 2), (1, 3), (2, 3)])}) == 1
        assert G.add_edge(1, 2) == G

    def test_pickles(self):
        G = OrderedGraph(4, [(1, 4), (2, 3)])
        assert pickle.loads(pickle.dumps(G)) == G


class TestIntervalColouring:
    def test_intervals(self):
        c = IntervalColouring((2, 0, 3))
        assert c.r == 3 and c.h == 5
        assert c.interval(1) == (1, 2)
        lo, hi = c.interval(2)
        assert hi < lo
        assert c.interval(3) == (3, 5)
        assert c.class_of(4) == 3
        assert not c.nonempty()

    def test_negative_length(self):
        with pytest.raises(InputError):
            IntervalColouring((2, -1))

    def test_is_proper(self):
        G = OrderedGraph(4, [(1, 3), (2, 4)])
        assert IntervalColouring((2, 2)).is_proper(G)
        assert not IntervalColouring((3, 1)).is_proper(G)
        assert not IntervalColouring((2, 1)).is_proper(G)


class TestMultipartite:
    def test_sizes_sorted_descending(self):
        B = CompleteMultipartite([2, 5, 3])
        assert B.sizes == (5, 3, 2)
        assert B.k == 3 and B.order == 10 and B.smallest_part() == 2
        assert str(B) == "parts: 5 3 2"

    def test_crit_chrom(self):
        assert CompleteMultipartite([3, 3, 2]).crit_chrom() == Fraction(8, 3)
        assert CompleteMultipartite([2, 2]).crit_chrom() == 2
        with pytest.raises(InputError):
            CompleteMultipartite([4]).crit_chrom()

    def test_bottle_shape(self):
        assert CompleteMultipartite([3, 3, 1]).is_bottle_shaped()
        assert CompleteMultipartite([2, 2]).is_bottle_shaped()
        assert not CompleteMultipartite([3, 2, 1]).is_bottle_shaped()

    def test_orderings_lexicographic_and_distinct(self):
        orders = [o.sizes_in_order for o in CompleteMultipartite([2, 1, 2]).orderings()]
        assert orders == [(1, 2, 2), (2, 1, 2), (2, 2, 1)]

    @pytest.mark.parametrize("sizes", [[], [0, 2], [2, -1], [1.5, 2]])
    def test_rejects_bad_sizes(self, sizes):
        with pytest.raises(InputError):
            CompleteMultipartite(sizes)

    def test_parse(self):
        assert CompleteMultipartite.parse("parts: 1 3 2  # comment") == CompleteMultipartite([3, 2, 1])
        assert OrderedMultipartite.parse("parts: 1 3 2").sizes_in_order == (1, 3, 2)
        with pytest.raises(InputError):
            OrderedMultipartite.parse("sizes: 1 2")
        with pytest.raises(InputError):
            OrderedMultipartite.parse("parts: 1 x")

    def test_to_graph(self):
        G = OrderedMultipartite((1, 2)).to_graph()
        assert G == OrderedGraph(3, [(1, 2), (1, 3)])
        assert OrderedMultipartite((2, 1, 2)).part_bounds() == [(1, 2), (3, 3), (4, 5)]
        assert OrderedMultipartite((2, 1, 2)).unordered() == CompleteMultipartite((2, 2, 1))


class TestAnswers:
    def test_witness_sorted_and_covered(self):
        w = TilingWitness(((4, 2), (1, 3)))
        assert w.copies == ((2, 4), (1, 3))
        assert w.covered() == frozenset({1, 2, 3, 4})
        assert w.to_lists() == [[2, 4], [1, 3]]

    def test_answer_dict(self):
        answer = TilingAnswer(TilingStatus.MAX_COVER, TilingWitness(((1, 2),)), 7, 1)
        assert answer.to_dict() == {"status": "MaxCover", "copies": [[1, 2]], "nodes": 7, "count": 1}
        none = TilingAnswer(TilingStatus.NO_PERFECT, None, 3)
        assert none.to_dict() == {"status": "NoPerfect", "copies": [], "nodes": 3}
        assert TilingAnswer(TilingStatus.TIMEOUT).timed_out

    def test_search_stats(self, tmp_path):
        stats = SearchStats()
        stats.record("a", TilingAnswer(TilingStatus.NO_PERFECT, None, 5))
        stats.record("a", TilingAnswer(TilingStatus.TIMEOUT, None, 10))
        other = SearchStats()
        other.record("b", TilingAnswer(TilingStatus.PERFECT_FOUND, TilingWitness(), 2))
        stats.merge(other)
        assert stats.total_nodes == 17
        assert stats.searches["a"] == 2
        assert stats.timeouts == ["a"]
        path = str(tmp_path / "stats.pkl")
        stats.save(path)
        assert SearchStats.load(path).total_nodes == 17


class TestParams:
    def test_defaults_and_overrides(self):
        params = ParamsTiling(budget=10)
        assert params.budget == 10
        assert params.memo_limit == ParamsTiling.defaults["memo_limit"]
        assert params.replace(budget=20).budget == 20
        assert params.budget == 10

    def test_unknown_key(self):
        with pytest.raises(InputError):
            ParamsTiling(depth=3)

    def test_negative_value(self):
        with pytest.raises(InputError):
            ParamsTiling(budget=-1)

    def test_read_only(self):
        with pytest.raises(AttributeError):
            ParamsTiling().budget = 3

    def test_abstract_params_has_no_keys(self):
        assert AbstractParams().to_dict() == {}
