from itertools import combinations

import pytest
from hypothesis import given, settings

from oracles import floyd_warshall
from test_graph import graphs
from wiener_ecc.errors import Disconnected, VertexOutOfRange
from wiener_ecc.graph import Graph, complete_graph, cycle_graph, from_edge_list, is_connected, path_graph, star_graph
from wiener_ecc.metrics import (
    all_pairs_distances,
    bfs_distances,
    eccentric_vertices,
    eccentricity_vector,
    invariant_summary,
    path_closed_forms,
    total_eccentricity,
    wiener_index,
)

P3, P4, C4, C6, K3, K4 = (
    path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(6), complete_graph(3), complete_graph(4)
)


def assert_metric_axioms(g, d):
    n = g.n
    for u in range(n):
        assert d[u][u] == 0
        for v in range(n):
            assert d[u][v] == d[v][u]
            if u != v:
                assert 1 <= d[u][v] <= n - 1
            assert (d[u][v] == 1) == bool(g.rows[u] >> v & 1)
            for w in range(n):
                assert d[u][w] <= d[u][v] + d[v][w]


def test_bfs_examples():
    assert bfs_distances(P3, 0) == [0, 1, 2]
    assert bfs_distances(K4, 2) == [1, 1, 0, 1]
    assert bfs_distances(C6, 0) == [0, 1, 2, 3, 2, 1]


def test_bfs_errors():
    with pytest.raises(Disconnected):
        bfs_distances(Graph([0, 0]), 0)
    with pytest.raises(VertexOutOfRange):
        bfs_distances(P3, 5)


def test_all_pairs_examples():
    assert all_pairs_distances(path_graph(2)).as_lists() == [[0, 1], [1, 0]]
    assert all_pairs_distances(P4)[0] == (0, 1, 2, 3)
    with pytest.raises(Disconnected):
        all_pairs_distances(from_edge_list(4, [(0, 1), (2, 3)]))


def test_all_pairs_matches_floyd_warshall_on_corpus(small_corpus):
    for g in small_corpus:
        d = all_pairs_distances(g)
        assert d.as_lists() == floyd_warshall(g)
        assert_metric_axioms(g, d)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=14))
def test_all_pairs_matches_floyd_warshall_random(g):
    if not is_connected(g):
        with pytest.raises(Disconnected):
            all_pairs_distances(g)
        return
    d = all_pairs_distances(g)
    assert d.as_lists() == floyd_warshall(g)
    assert_metric_axioms(g, d)
    s = invariant_summary(g)
    if g.n > 1:
        assert s.radius <= s.diameter <= 2 * s.radius


def test_wiener_examples():
    assert wiener_index(all_pairs_distances(complete_graph(5))) == 10
    assert wiener_index(all_pairs_distances(path_graph(9))) == 120
    assert wiener_index(all_pairs_distances(C6)) == 27


def test_wiener_p9_brute_force():
    # Direct pair enumeration on the path: d(i, j) = |i - j|.
    assert sum(j - i for i, j in combinations(range(9), 2)) == 120


def test_eccentricity_examples():
    assert eccentricity_vector(all_pairs_distances(P3)) == [2, 1, 2]
    assert eccentricity_vector(all_pairs_distances(K4)) == [1, 1, 1, 1]
    ecc = eccentricity_vector(all_pairs_distances(path_graph(9)))
    assert ecc == [8, 7, 6, 5, 4, 5, 6, 7, 8]
    assert sum(ecc) == 56


def test_singleton_eccentricity():
    d = all_pairs_distances(Graph([0]))
    assert eccentricity_vector(d) == [0]
    assert total_eccentricity(d) == 0
    assert wiener_index(d) == 0


def test_total_eccentricity_examples():
    assert total_eccentricity(all_pairs_distances(path_graph(2))) == 2
    assert total_eccentricity(all_pairs_distances(P3)) == 5
    assert total_eccentricity(all_pairs_distances(path_graph(10))) == 70


def test_eccentric_vertices_examples():
    assert eccentric_vertices(all_pairs_distances(P4), 1) == {3}
    assert eccentric_vertices(all_pairs_distances(C4), 0) == {2}
    assert eccentric_vertices(all_pairs_distances(K3), 0) == {1, 2}
    with pytest.raises(VertexOutOfRange):
        eccentric_vertices(all_pairs_distances(K3), 3)


@pytest.mark.parametrize(
    "g, wiener, ecc, wse",
    [
        (path_graph(2), 1, 2, -1),
        (P4, 10, 10, 0),
        (path_graph(9), 120, 56, 64),
        (star_graph(3), 9, 7, 2),
        (C6, 27, 18, 9),
    ],
)
def test_invariant_summary_examples(g, wiener, ecc, wse):
    s = invariant_summary(g)
    assert (s.wiener, s.total_ecc, s.wse) == (wiener, ecc, wse)
    assert s.total_ecc == sum(s.ecc)
    assert (s.radius, s.diameter) == (min(s.ecc), max(s.ecc))


def test_path_closed_forms_examples():
    assert path_closed_forms(2) == (1, 2)
    assert path_closed_forms(9) == (120, 56)
    assert path_closed_forms(10) == (165, 70)


@pytest.mark.parametrize("n", range(1, 65))
def test_path_summary_matches_closed_forms(n):
    s = invariant_summary(path_graph(n))
    assert (s.wiener, s.total_ecc) == path_closed_forms(n)
    # Independent brute force straight from |i - j|.
    assert s.wiener == sum(j - i for i, j in combinations(range(n), 2))


@pytest.mark.parametrize("n", range(2, 65))
def test_complete_graph_invariants(n):
    s = invariant_summary(complete_graph(n))
    assert s.wiener == n * (n - 1) // 2
    assert s.total_ecc == n


@pytest.mark.parametrize("n", range(3, 65))
def test_cycle_wiener_against_brute_force(n):
    brute = sum(min(j - i, n - (j - i)) for i, j in combinations(range(n), 2))
    d = all_pairs_distances(cycle_graph(n))
    assert sum(d[0]) == sum(min(k, n - k) for k in range(n))
    assert wiener_index(d) == brute
