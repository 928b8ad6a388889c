import pytest

from wiener_ecc.errors import Disconnected, NotAnEdge, TooSmall
from wiener_ecc.graph import Edge, Graph, complete_graph, cycle_graph, from_edge_list, path_graph, star_graph
from wiener_ecc.metrics import all_pairs_distances, eccentric_vertices, path_closed_forms
from wiener_ecc.verification import (
    LEMMA_IDS,
    ContractionCase,
    LemmaReport,
    cases,
    check_common_eccentric,
    check_conjecture2,
    check_contraction_inequality,
    check_distance_drop_alpha,
    check_distance_drop_pairs,
    check_merged_eccentric,
    check_pointwise_common,
    check_pointwise_merged,
    conjecture2_bound,
)

P3, P4, C4, C6, K3 = path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(6), complete_graph(3)


def test_failing_report_needs_witness():
    with pytest.raises(ValueError):
        LemmaReport("D1", "Bw", Edge(0, 1), False)


def test_distance_drop_pairs_hand_cases():
    case = ContractionCase(C4, (0, 1))
    f = case.result.fwd_map
    assert case.dg[2][3] == 1 == case.dh[f[2]][f[3]]
    case = ContractionCase(C6, (0, 1))
    f = case.result.fwd_map
    assert case.dg[2][5] == 3 and case.dh[f[2]][f[5]] == 2
    assert check_distance_drop_pairs(C4, (0, 1)).holds
    assert check_distance_drop_pairs(C6, (0, 1)).holds


def test_distance_drop_alpha_hand_cases():
    case = ContractionCase(C4, (0, 1))
    f, alpha = case.result.fwd_map, case.result.alpha
    assert case.dg[2][0] == 2 and case.dh[f[2]][alpha] == 1
    assert case.dg[3][0] == 1 and case.dh[f[3]][alpha] == 1
    assert check_distance_drop_alpha(C4, (0, 1)).holds


def test_merged_eccentric_hand_cases():
    case = ContractionCase(P4, (0, 1))
    assert eccentric_vertices(case.dg, 3) == {0}
    assert case.dh[case.result.fwd_map[3]][case.result.alpha] == 2
    assert check_merged_eccentric(P4, (0, 1)).holds
    assert check_merged_eccentric(K3, (0, 1)).holds


def test_merged_eccentric_needs_all_farthest_in_pair():
    # Path x-y-u-a-w: u's farthest set is {x, w}. After contracting x-y the
    # merged vertex sits at distance 1 from u while w stays at 2, so alpha is
    # only guaranteed farthest when every farthest vertex of u is x or y.
    x, y, u, a, w = 0, 1, 2, 3, 4
    g = from_edge_list(5, [(x, y), (y, u), (u, a), (a, w)])
    case = ContractionCase(g, (x, y))
    assert eccentric_vertices(case.dg, u) == {x, w}
    fu = case.result.fwd_map[u]
    assert case.dh[fu][case.result.alpha] == 1
    assert max(case.dh[fu]) == 2
    assert case.merged_eccentric().holds


def test_common_eccentric_hand_cases():
    case = ContractionCase(P4, (1, 2))
    assert eccentric_vertices(case.dg, 0) == {3}
    assert case.dh[0][case.result.fwd_map[3]] == 2 == max(case.dh[0])
    assert check_common_eccentric(P4, (1, 2)).holds
    # C6, e = 0-1: vertex 3's only antipode is x, so the hypothesis is vacuous.
    assert eccentric_vertices(all_pairs_distances(C6), 3) == {0}
    assert check_common_eccentric(C6, (0, 1)).holds


def test_pointwise_common_doubled_values():
    case = ContractionCase(P4, (0, 1))
    common, _ = case.pointwise_terms
    slack = dict(zip(case.survivors, common))
    # u = 3: G side 6 - 6 = 0, P3 side 3 - 4 = -1, slack 1.
    assert slack[3] == 1
    case = ContractionCase(K3, (0, 1))
    assert dict(zip(case.survivors, case.pointwise_terms[0])) == {2: 1}
    assert check_pointwise_common(P4, (0, 1)).holds


def test_pointwise_merged_doubled_values():
    # P3, e = 0-1: (-1) + 0 >= -1 with equality.
    assert ContractionCase(P3, (0, 1)).pointwise_terms[1] == 0
    # C4, e = 0-1: 0 + 0 >= 0.
    assert ContractionCase(C4, (0, 1)).pointwise_terms[1] == 0
    assert check_pointwise_merged(P3, (0, 1)).holds
    assert check_pointwise_merged(C4, (0, 1)).holds


@pytest.mark.parametrize(
    "g, before, after",
    [(P3, -1, -1), (C4, 0, 0), (star_graph(3), 2, -1), (K3, 0, -1)],
)
def test_contraction_inequality_examples(g, before, after):
    for e in g.edges():
        rec = check_contraction_inequality(g, e)
        assert (rec.wse_before, rec.wse_after) == (before, after)
        assert rec.delta == before - after and rec.passed


def test_checker_errors():
    with pytest.raises(TooSmall):
        check_contraction_inequality(path_graph(2), (0, 1))
    with pytest.raises(NotAnEdge):
        check_contraction_inequality(P4, (0, 3))
    with pytest.raises(Disconnected):
        check_contraction_inequality(from_edge_list(4, [(0, 1), (2, 3)]), (0, 1))
    with pytest.raises(TooSmall):
        cases(path_graph(2))


def test_all_reports_hold_on_small_corpus(small_corpus):
    for g in small_corpus:
        for case in cases(g):
            reports = case.lemma_reports()
            assert [r.lemma_id for r in reports] == list(LEMMA_IDS)
            assert all(r.holds for r in reports), [r for r in reports if not r.holds]
            rec = case.inequality()
            assert rec.passed
            common, merged = case.pointwise_terms
            assert sum(common) + merged == 2 * rec.delta


def test_conjecture2_bound_values():
    assert conjecture2_bound(9) == 64
    assert conjecture2_bound(10) == 95
    assert conjecture2_bound(20) == 1040
    w, e = path_closed_forms(20)
    assert (w, e) == (1330, 290)


@pytest.mark.parametrize("n", range(1, 80))
def test_conjecture2_bound_is_the_rational_floor(n):
    from fractions import Fraction
    exact = Fraction(n**3, 6) - Fraction(3 * n * n, 4) + Fraction(n, 3) + Fraction(1, 4)
    assert conjecture2_bound(n) == exact.numerator // exact.denominator


def test_check_conjecture2_examples():
    rec = check_conjecture2(path_graph(9))
    assert (rec.radius, rec.wse, rec.bound) == (4, 64, 64)
    assert rec.equality and rec.is_path and rec.within_bound and not rec.finding
    assert check_conjecture2(C4) is None
    rec = check_conjecture2(path_graph(20))
    assert rec.equality and rec.is_path
    rec = check_conjecture2(cycle_graph(8))
    assert rec.radius == 4 and rec.within_bound and not rec.equality and not rec.finding
    with pytest.raises(Disconnected):
        check_conjecture2(Graph([0, 0]))


def test_check_conjecture2_emits_only_at_radius_four(corpus_by_n):
    for g in corpus_by_n[7] + corpus_by_n[8]:
        rec = check_conjecture2(g)
        radius = min(max(r) for r in all_pairs_distances(g).rows)
        assert (rec is not None) == (radius >= 4)
