from fractions import Fraction

import pandas as pd
import pytest

from ordtile.core import count_copies
from ordtile.critical import chi_star_exact
from ordtile.data import generators
from ordtile.datatypes import (CompleteMultipartite, ContradictionError, InconclusiveError, InputError,
                               OrderedGraph, SearchStats, TilingStatus, UnsupportedInputError)
from ordtile.extremal import (ParamsExtremal, adversarial_labelling, balanced_parts, build_fourpart,
                              build_F1, build_F2, build_F3, counting_obstruction_fourpart, degree_sweep,
                              fourpart_parts, f1_classes, f1_grid, f1_singleton, f2_ell, report_fourpart,
                              report_F1, report_F2, report_F3)
from ordtile.extremal.degree_sweep import COLUMNS
from ordtile.tiling import perfect_tiling


def test_balanced_parts():
    assert balanced_parts(10, 3) == [3, 3, 4]
    assert balanced_parts(8, 2) == [4, 4]


class TestF1:
    def test_class_sizes(self):
        assert f1_classes(7, 2, 1, 2) == [1, 3, 3]
        assert f1_classes(13, 3, 1, 4) == [1, 4, 4, 4]
        # two leftover vertices land on the last classes other than U_i and U_j
        assert f1_classes(15, 3, 2, 1) == [4, 1, 5, 5]

    def test_min_degree(self):
        G = build_F1(13, 3, 1, 4)
        assert G.min_degree() == 8
        assert f1_singleton(13, 3, 1, 4) == 1
        assert f1_singleton(7, 2, 3, 1) == 7

    def test_singleton_misses_class_j(self):
        G = build_F1(7, 2, 1, 2)
        assert G.neighbours(1) == [5, 6, 7]

    @pytest.mark.parametrize("args", [(7, 1, 1, 2), (7, 2, 1, 1), (7, 2, 1, 4), (2, 2, 1, 2), (3.0, 2, 1, 2)])
    def test_rejects(self, args):
        with pytest.raises(InputError):
            build_F1(*args)

    @pytest.mark.parametrize("n, r, i, j", [(7, 2, 1, 2), (8, 2, 2, 1), (9, 2, 3, 1), (10, 2, 2, 3), (12, 3, 2, 4),
                                             (13, 3, 1, 4), (14, 3, 2, 3), (15, 3, 4, 1), (11, 4, 5, 2), (16, 4, 3, 5)])
    def test_singleton_misses_exactly_class_j(self, n, r, i, j):
        G = build_F1(n, r, i, j)
        assert G.min_degree() == n - 1 - (n - 1) // r
        sizes = f1_classes(n, r, i, j)
        assert sizes[i - 1] == 1 and sum(sizes) == n
        start = sum(sizes[:j - 1]) + 1
        class_j = set(range(start, start + sizes[j - 1]))
        u = f1_singleton(n, r, i, j)
        assert set(G.neighbours(u)) == set(range(1, n + 1)) - class_j - {u}

    @pytest.mark.parametrize("n", [9, 11, 13])
    def test_barrier_leaves_singleton_uncovered(self, n, k22):
        report = report_F1(n, 2, 1, 3, H=k22)
        assert report.verified
        assert f1_singleton(n, 2, 1, 3) in report.obstruction["uncovered"]

    def test_report_with_barrier(self, k22):
        report = report_F1(9, 2, 1, 3, H=k22)
        assert report.verified
        assert 1 in report.obstruction["uncovered"]
        doc = report.to_dict()
        assert doc["obstruction"]["kind"] == "NoCoverAt"
        assert doc["obstruction"]["vertex"] == 1
        assert doc["claimed_bound"] == {"value": "4", "expression": "n-1-floor((n-1)/r)"}
        assert doc["min_degree"] == 4

    def test_report_without_pattern(self):
        report = report_F1(13, 3, 1, 4)
        assert report.verified is None
        assert report.to_dict()["parameters"] == {"n": 13, "r": 3, "i": 1, "j": 4}

    def test_report_pattern_too_large(self):
        with pytest.raises(InputError):
            report_F1(7, 2, 1, 2, H=OrderedGraph.complete(8))

    def test_degree_sweep(self):
        table = degree_sweep("F1", f1_grid(12, r_max=3))
        assert isinstance(table, pd.DataFrame)
        assert list(table.columns) == COLUMNS
        assert len(table) > 0
        assert table["match"].all()


class TestF2:
    def test_ell(self):
        assert f2_ell(20, Fraction(15, 4)) == 6
        assert f2_ell(8, Fraction(2)) == 5

    def test_build(self, k212, edge, path5):
        assert build_F2(k212, 20, Fraction(15, 4)).sizes == (6, 6, 6, 2)
        assert build_F2(edge, 8, "2").sizes == (5, 3)
        assert build_F2(path5, 10, chi_star_exact(path5)).sizes == (5, 5)

    def test_build_rejects(self, path5, edge):
        with pytest.raises(InputError):
            build_F2(edge, 7, 2)
        with pytest.raises(InputError):
            build_F2(edge, 8, 1)
        with pytest.raises(UnsupportedInputError):
            build_F2(path5, 10, chi_star_exact(path5, search_effort="none"))

    def test_adversarial_edge(self, edge):
        stats = SearchStats()
        ordering = adversarial_labelling(CompleteMultipartite((5, 3)), edge, stats=stats)
        assert ordering.sizes_in_order == (3, 5)
        assert stats.searches["parts: 3 5"] == 1

    def test_adversarial_threads_agree(self, k212):
        B = build_F2(k212, 20, Fraction(15, 4))
        inline = adversarial_labelling(B, k212)
        threaded = adversarial_labelling(B, k212, params=ParamsExtremal(jobs=4))
        assert inline == threaded
        answer = perfect_tiling(inline.to_graph(), k212)
        assert answer.status is TilingStatus.NO_PERFECT

    def test_adversarial_contradiction(self, edge):
        with pytest.raises(ContradictionError):
            adversarial_labelling(CompleteMultipartite((2, 2)), edge)

    def test_adversarial_inconclusive(self, edge):
        with pytest.raises(InconclusiveError):
            adversarial_labelling(CompleteMultipartite((2, 2)), edge, budget=1)

    def test_adversarial_divisibility(self, edge):
        with pytest.raises(InputError):
            adversarial_labelling(CompleteMultipartite((2, 1)), edge)

    @pytest.mark.slow
    @pytest.mark.parametrize("name", sorted(generators.FIXTURES))
    def test_adversarial_on_fixtures(self, name):
        H = generators.FIXTURES[name]()
        chi_star = chi_star_exact(H)
        if not chi_star.is_exact:
            pytest.skip(f"no exact critical chromatic number for {name}")
        n = 2 * H.h
        ordering = adversarial_labelling(build_F2(H, n, chi_star), H)
        graph = ordering.to_graph()
        assert perfect_tiling(graph, H).status is TilingStatus.NO_PERFECT
        assert graph.min_degree() >= (1 - 1 / chi_star.value) * n - 1

    def test_report_path5(self, path5):
        report = report_F2(path5, 10, Fraction(5, 2))
        assert report.verified
        assert report.min_degree == 5
        doc = report.to_dict()
        assert doc["obstruction"]["ordering"] == [5, 5]
        assert doc["parameters"] == {"n": 10, "chi_star": "5/2", "ell": 5}
        assert doc["claimed_bound"]["value"] == "5"

    def test_report_edge(self, edge):
        report = report_F2(edge, 8, 2)
        assert report.obstruction["ordering"] == [3, 5]
        assert report.min_degree == 3


class TestF3:
    def test_build(self, k3, skip_path7, edge):
        assert build_F3(k3, 8) == OrderedGraph(8, [(u, v) for u in range(1, 5) for v in range(5, 9)])
        assert build_F3(skip_path7, 9).min_degree() == 6
        assert build_F3(edge, 5) == OrderedGraph.empty(5)

    @pytest.mark.parametrize("H", [
        *(make() for make in generators.FIXTURES.values()),
        OrderedGraph.complete(3),
        OrderedGraph.complete(4),
        OrderedGraph(4, [(1, 3), (2, 4)]),
        OrderedGraph(4, [(1, 4), (2, 3)]),
        OrderedGraph(5, [(1, 5), (2, 3), (3, 4)]),
    ], ids=str)
    def test_holds_no_copy(self, H):
        n = H.h + 3
        G = build_F3(H, n)
        assert count_copies(G, H) == 0
        report = report_F3(H, n)
        assert report.verified
        assert report.min_degree == G.min_degree()

    def test_build_rejects_edgeless(self):
        with pytest.raises(UnsupportedInputError):
            build_F3(OrderedGraph.empty(3), 5)

    def test_report(self, skip_path7, edge):
        report = report_F3(skip_path7, 9)
        assert report.verified
        assert report.min_degree == 6
        assert report.to_dict()["parameters"] == {"n": 9, "r": 4}
        assert report_F3(edge, 5).min_degree == 0

    def test_degree_sweep(self):
        table = degree_sweep("F3", [(n, r) for n in range(3, 10) for r in range(2, 5)])
        assert table["match"].all()
        assert table["i"].isna().all()

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            degree_sweep("F4", [])


class TestSpaceBarrier:
    def test_parts(self):
        assert fourpart_parts(2, 20) == (6, 6, 6, 2)
        with pytest.raises(InputError):
            fourpart_parts(2, 5)

    def test_counting(self):
        counting = counting_obstruction_fourpart(2, build_fourpart(2, 20))
        assert counting.lhs == Fraction(9, 2)
        assert counting.rhs == 4
        assert counting.holds()
        assert counting.to_dict() == {"lhs": "9/2", "rhs": "4"}

    def test_report(self):
        report = report_fourpart(2, 20)
        assert report.min_degree == 14
        assert report.verified
        assert report.obstruction["search"] == "NoPerfect"
        assert report.obstruction["counting_holds"] is True

    def test_report_without_search(self):
        report = report_fourpart(2, 20, search=False)
        assert "search" not in report.obstruction
        assert report.verified

    def test_report_divisibility(self):
        with pytest.raises(InputError):
            report_fourpart(2, 21)
