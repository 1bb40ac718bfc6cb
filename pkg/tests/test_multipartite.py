from fractions import Fraction

import pytest

from ordtile.data import generators
from ordtile.datatypes import (CompleteMultipartite, InputError, OrderedGraph, OrderedMultipartite,
                               UnsupportedInputError)
from ordtile.multipartite import (BottleStatus, CertificateKind, ParamsBottle, bipartite_bottle, blow_up,
                                  check_bottlegraph_bounded, check_simple_bottlegraph, comp3partite_bottle,
                                  crit_chrom, distinct_orderings, flexible_frame, frame_sizes,
                                  is_bottle_shape, no_certificate, normalize_bottleshape,
                                  upperbound_construction)
from ordtile.core import interval_chromatic
from ordtile.critical import chi_star_bounds, colouring_statistics, g_value
from ordtile.multipartite.verdicts import BLOWUP_CACHE_SIZE, _blowup_answer, clear_blowup_cache
from ordtile.structure import is_flexible
from ordtile.tiling import verify_tiling
from tests.strategies import all_graphs


def test_crit_chrom_accepts_every_form():
    assert crit_chrom([3, 3, 2]) == Fraction(8, 3)
    assert crit_chrom(OrderedMultipartite((2, 3, 3))) == Fraction(8, 3)
    assert crit_chrom(CompleteMultipartite((3, 3, 2))) == Fraction(8, 3)


def test_distinct_orderings():
    assert [o.sizes_in_order for o in distinct_orderings([2, 2])] == [(2, 2)]
    assert len(distinct_orderings([1, 2, 3])) == 6


def test_blow_up():
    assert blow_up(OrderedMultipartite((1, 2)), 3).sizes_in_order == (3, 6)
    with pytest.raises(InputError):
        blow_up((1, 2), 0)


@pytest.mark.parametrize("sizes, shaped", [
    ((3, 2, 2), (5, 5, 4)),
    ((2, 2, 1), (4, 4, 2)),
])
def test_normalize_bottleshape(sizes, shaped):
    result = normalize_bottleshape(sizes)
    assert result.sizes == shaped
    assert result.crit_chrom() == crit_chrom(sizes)
    assert is_bottle_shape(result)


def test_simple_bottlegraph_barrier8(barrier8):
    verdict = check_simple_bottlegraph(CompleteMultipartite((3, 3, 2)), barrier8)
    assert verdict.status is BottleStatus.SIMPLE_YES
    assert sorted(verdict.witnesses) == [(2, 3, 3), (3, 2, 3), (3, 3, 2)]
    for sizes, witness in verdict.witnesses.items():
        assert verify_tiling(OrderedMultipartite(sizes).to_graph(), barrier8, witness, require_perfect=True)
    doc = verdict.to_dict()
    assert doc["status"] == "SimpleYes"
    assert doc["failing_ordering"] is None
    assert [o["t"] for o in doc["orderings"]] == [1, 1, 1]


def test_simple_bottlegraph_path5(path5):
    assert check_simple_bottlegraph(CompleteMultipartite((2, 2, 1)), path5).status is BottleStatus.SIMPLE_YES


def test_not_simple_names_ordering(edge):
    verdict = check_simple_bottlegraph(CompleteMultipartite((3, 1)), edge)
    assert verdict.status is BottleStatus.NOT_SIMPLE
    assert verdict.failing_ordering == (1, 3)


def test_simple_check_threads_agree(barrier8):
    B = CompleteMultipartite((3, 3, 2))
    threaded = check_simple_bottlegraph(B, barrier8, params=ParamsBottle(jobs=3))
    assert threaded.status is BottleStatus.SIMPLE_YES
    assert threaded.to_dict() == check_simple_bottlegraph(B, barrier8).to_dict()


def test_simple_check_divisibility(edge):
    with pytest.raises(InputError):
        check_simple_bottlegraph(CompleteMultipartite((2, 1)), edge)


def test_simple_check_timeout(barrier8):
    verdict = check_simple_bottlegraph(CompleteMultipartite((3, 3, 2)), barrier8, budget=1)
    assert verdict.status is BottleStatus.UNKNOWN


def test_counting_certificate(path5):
    certificate = no_certificate(CompleteMultipartite((5, 5, 1)), path5)
    assert certificate.kind is CertificateKind.COUNTING_FIRST_PART
    assert certificate.lhs == Fraction(11, 5)
    assert certificate.rhs == Fraction(5, 2)
    assert certificate.holds()


def test_part_count_certificate(k3):
    verdict = check_bottlegraph_bounded(CompleteMultipartite((3, 3)), k3)
    assert verdict.status is BottleStatus.NO
    assert verdict.certificate.kind is CertificateKind.PART_COUNT
    assert verdict.to_dict()["certificate"] == {"kind": "PartCount", "lhs": "2", "rhs": "3"}


def test_bounded_finds_blow_up(edge):
    verdict = check_bottlegraph_bounded(CompleteMultipartite((1, 1)), edge, t_max=2)
    assert verdict.status is BottleStatus.BOUNDED_YES
    assert verdict.blowups == {(1, 1): 1}


def test_bounded_counting_rules_out(edge):
    verdict = check_bottlegraph_bounded(CompleteMultipartite((2, 1)), edge, t_max=2)
    assert verdict.status is BottleStatus.NO
    assert verdict.certificate.kind is CertificateKind.COUNTING_FIRST_PART


def test_bounded_unknown_on_timeout(edge):
    verdict = check_bottlegraph_bounded(CompleteMultipartite((2, 2)), edge, budget=1)
    assert verdict.status is BottleStatus.UNKNOWN
    assert not verdict.positive


def test_upperbound_construction(edge, path5):
    B, tiler = upperbound_construction(edge)
    assert B.sizes == (2, 2)
    for order in distinct_orderings(B):
        assert tiler.verify(order)
        assert verify_tiling(order.to_graph(), edge, tiler.materialize(order), require_perfect=True)
    B, tiler = upperbound_construction(path5)
    assert B.crit_chrom() == 5
    assert all(tiler.verify(order) for order in distinct_orderings(B))


def test_interval_tiler_rejects_foreign_ordering(edge):
    _, tiler = upperbound_construction(edge)
    with pytest.raises(InputError):
        tiler.verify((1, 3))


@pytest.mark.parametrize("parts, expected", [
    ((2, 1, 2), (4, 4, 4, 3)),
    ((2, 1, 3), (72, 72, 72, 72, 36)),
    ((4, 3, 5), (144, 144, 144, 108)),
])
def test_comp3partite_bottle(parts, expected):
    B = comp3partite_bottle(*parts)
    assert B.sizes == expected
    assert B.crit_chrom() == g_value(*parts)


def test_comp3partite_bottle_tiles(k212):
    B = comp3partite_bottle(2, 1, 2)
    assert check_simple_bottlegraph(B, k212).status is BottleStatus.SIMPLE_YES


def test_bipartite_bottle(k22, edge):
    assert bipartite_bottle(k22).sizes == (2, 2)
    assert bipartite_bottle(edge).sizes == (1, 1)
    with pytest.raises(UnsupportedInputError):
        bipartite_bottle(OrderedGraph.complete(3))


def test_frame_of_path5(path5):
    sizes = frame_sizes(path5)
    assert sum(sizes) == 300
    F, witness = flexible_frame(path5)
    assert F.sizes_in_order == tuple(sizes)
    assert len(witness) == 60


@pytest.mark.parametrize("perturbation, t", [
    ((1, -1, 0), 1),
    ((-5, 0, 5), 2),
    ((5, 0, 0), 1),
    ((2, 2, 6), 2),
])
def test_perturbed_frames_tile(path5, perturbation, t):
    F, witness = flexible_frame(path5, perturbation, t)
    base = frame_sizes(path5)
    assert F.sizes_in_order == tuple(t * b + s for b, s in zip(base, perturbation))
    assert verify_tiling(F.to_graph(), path5, witness, require_perfect=True)


def test_frame_rejects(path5, edge):
    with pytest.raises(UnsupportedInputError):
        flexible_frame(edge)
    with pytest.raises(InputError):
        flexible_frame(path5, (1, 1, 1))
    with pytest.raises(InputError):
        flexible_frame(path5, (0, 0))
    with pytest.raises(InputError):
        flexible_frame(path5, t=0)


def test_skip_path7_frame_is_consistent():
    H = generators.skip_path7()
    F, witness = flexible_frame(H)
    assert F.order == sum(frame_sizes(H))
    assert len(witness) * H.h == F.order


def test_bipartite_bottle_needs_large_alpha():
    H = OrderedGraph(3, [(1, 2)])
    with pytest.raises(UnsupportedInputError):
        bipartite_bottle(H)
    verdict = check_simple_bottlegraph(CompleteMultipartite((2, 1)), H)
    assert verdict.status is BottleStatus.NOT_SIMPLE
    assert verdict.failing_ordering == (2, 1)


def _bipartite_patterns(max_h):
    for h in range(2, max_h + 1):
        for H in all_graphs(h):
            if H.edges and interval_chromatic(H)[0] == 2:
                yield H


@pytest.mark.slow
def test_bipartite_bottle_on_every_small_pattern():
    checked = 0
    for H in _bipartite_patterns(5):
        alpha = colouring_statistics(H).alpha
        if 2 * alpha < H.h:
            with pytest.raises(UnsupportedInputError):
                bipartite_bottle(H)
            continue
        B = bipartite_bottle(H)
        assert B.sizes == (max(alpha, H.h - alpha), min(alpha, H.h - alpha))
        assert check_simple_bottlegraph(B, H).status is BottleStatus.SIMPLE_YES
        assert chi_star_bounds(H).contains(Fraction(H.h, alpha))
        checked += 1
    assert checked > 0


@pytest.mark.slow
@pytest.mark.parametrize("h", range(2, 6))
def test_upperbound_construction_on_every_small_pattern(h):
    for H in all_graphs(h):
        if not H.edges:
            continue
        B, tiler = upperbound_construction(H)
        assert B.crit_chrom() == Fraction(h, colouring_statistics(H).ell_plus)
        for order in distinct_orderings(B):
            assert tiler.verify(order)
            if h <= 4:
                assert verify_tiling(order.to_graph(), H, tiler.materialize(order), require_perfect=True)


def _balanced_perturbations(r, h):
    yield (0,) * r
    for a in range(r):
        for b in range(r):
            if a == b:
                continue
            for step in (1, h):
                s = [0] * r
                s[a], s[b] = step, -step
                yield tuple(s)


def _flexible_fixtures(limit=1200):
    for name, make in sorted(generators.FIXTURES.items()):
        H = make()
        if is_flexible(H).flexible and sum(frame_sizes(H)) <= limit:
            yield name, H


def _check_frame(H, perturbation, t):
    F, witness = flexible_frame(H, perturbation, t)
    base = frame_sizes(H)
    assert F.sizes_in_order == tuple(t * b + s for b, s in zip(base, perturbation))
    assert len(witness) * H.h == F.order
    if F.order <= 400:
        assert verify_tiling(F.to_graph(), H, witness, require_perfect=True)


@pytest.mark.slow
def test_frames_of_flexible_fixtures_with_balanced_perturbations():
    names = []
    for name, H in _flexible_fixtures():
        names.append(name)
        r, _ = interval_chromatic(H)
        for perturbation in _balanced_perturbations(r, H.h):
            _check_frame(H, perturbation, 1)
    assert "path5" in names


@pytest.mark.slow
def test_frames_of_flexible_fixtures_with_nonnegative_perturbations():
    for _, H in _flexible_fixtures():
        r, _ = interval_chromatic(H)
        for a in range(r):
            s = [0] * r
            s[a] = H.h
            _check_frame(H, tuple(s), 1)
        if sum(frame_sizes(H)) <= 400:
            s = [0] * r
            s[0] += H.h
            s[-1] += H.h
            _check_frame(H, tuple(s), 2)


def test_bounded_check_reuses_blowup_answers(edge):
    clear_blowup_cache()
    B = CompleteMultipartite((1, 1))
    first = check_bottlegraph_bounded(B, edge, t_max=2)
    before = _blowup_answer.cache_info()
    second = check_bottlegraph_bounded(B, edge, t_max=2)
    after = _blowup_answer.cache_info()
    assert first.to_dict() == second.to_dict()
    assert after.hits > before.hits
    assert after.maxsize == BLOWUP_CACHE_SIZE
