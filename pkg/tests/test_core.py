import pytest
from hypothesis import given
from hypothesis import strategies as st

from wig.core import (
    UNREACHABLE,
    WIENER_MAX,
    DistanceRow,
    ExplicitGraph,
    WienerValue,
    WorkCounter,
    WorkSummary,
    bfs_sssp,
    dijkstra_sssp,
    oracle_sssp,
    oracle_wiener,
    wiener_by_source,
    wiener_from_rows,
)
from wig.errors import BadWeight, DisconnectedGraph, InvalidInput, InvalidVertex, WienerOverflow

from oracles import floyd_warshall, pairs_wiener, path_wiener
from strategies import graphs


def path(n):
    return ExplicitGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return ExplicitGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n):
    return ExplicitGraph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def rows_of(g):
    return [oracle_sssp(g, s) for s in range(1, g.n + 1)]


# --- bfs_sssp ---------------------------------------------------------------


def test_bfs_path():
    assert bfs_sssp(path(3), 1).dist == [0, 1, 2]


def test_bfs_single_vertex():
    assert bfs_sssp(ExplicitGraph.from_edges(1, []), 1).dist == [0]


def test_bfs_two_isolated():
    assert bfs_sssp(ExplicitGraph.from_edges(2, []), 1).dist == [0, UNREACHABLE]


@pytest.mark.parametrize("s", [0, 4, -1])
def test_bfs_rejects_bad_source(s):
    with pytest.raises(InvalidVertex):
        bfs_sssp(path(3), s)


def test_bfs_rejects_weighted():
    g = ExplicitGraph.from_edges(2, [(1, 2, 3)], weighted=True)
    with pytest.raises(InvalidInput):
        bfs_sssp(g, 1)


# --- dijkstra_sssp ----------------------------------------------------------


def test_dijkstra_triangle():
    # weight-1 edge is 1-2; going 1->3 directly costs 3, via 2 costs 1 + 2
    g = ExplicitGraph.from_edges(3, [(1, 2, 1), (2, 3, 2), (3, 1, 3)], weighted=True)
    assert dijkstra_sssp(g, 1).dist == [0, 1, 3]


def test_dijkstra_single_edge():
    g = ExplicitGraph.from_edges(2, [(1, 2, 5)], weighted=True)
    assert dijkstra_sssp(g, 1).dist == [0, 5]


def test_dijkstra_star():
    g = ExplicitGraph.from_edges(6, [(1, k, 1) for k in range(2, 7)], weighted=True)
    assert dijkstra_sssp(g, 1).dist == [0, 1, 1, 1, 1, 1]


def test_dijkstra_rejects_bad_source():
    with pytest.raises(InvalidVertex):
        dijkstra_sssp(ExplicitGraph.from_edges(2, [(1, 2, 5)], weighted=True), 3)


# --- wiener_from_rows / oracle_wiener --------------------------------------


def test_rows_p3():
    assert wiener_from_rows(rows_of(path(3))).value == 4


def test_rows_k2():
    assert wiener_from_rows(rows_of(path(2))).value == 1


def test_rows_c4():
    assert wiener_from_rows(rows_of(cycle(4))).value == 8


def test_rows_disconnected():
    with pytest.raises(DisconnectedGraph):
        wiener_from_rows(rows_of(ExplicitGraph.from_edges(3, [(1, 2)])))


def test_rows_overflow():
    big = 2**64
    rows = [DistanceRow(1, [0, big]), DistanceRow(2, [big, 0])]
    with pytest.raises(WienerOverflow):
        wiener_from_rows(rows)


def test_rows_must_cover_sources():
    with pytest.raises(InvalidInput):
        wiener_from_rows([DistanceRow(1, [0, 1]), DistanceRow(1, [0, 1])])


def test_wiener_value_bounds():
    assert WienerValue(WIENER_MAX).value == WIENER_MAX
    with pytest.raises(WienerOverflow):
        WienerValue(WIENER_MAX + 1)


def test_oracle_p5():
    assert oracle_wiener(path(5)).value == 20 == path_wiener(5)


def test_oracle_k4():
    assert oracle_wiener(complete(4)).value == 6


def test_oracle_c6():
    assert oracle_wiener(cycle(6)).value == 27 == 6**3 // 8


def test_oracle_parallel_matches_sequential():
    g = cycle(9)
    seq, par = WorkSummary(), WorkSummary()
    assert oracle_wiener(g, work=seq) == oracle_wiener(g, parallel=True, work=par)
    assert seq.total_visits == par.total_visits and par.sources == 9


def test_oracle_disconnected():
    with pytest.raises(DisconnectedGraph):
        oracle_wiener(ExplicitGraph.from_edges(2, []))


def test_work_summary_aggregates():
    summary = WorkSummary()
    wiener_by_source(4, lambda s, c: bfs_sssp(path(4), s, c), work=summary)
    assert summary.sources == 4
    assert summary.total_visits == 16
    assert summary.max_layers == 3


# --- ExplicitGraph ------------------------------------------------------------


@pytest.mark.parametrize(
    "edges, exc",
    [
        ([(1, 1)], InvalidInput),
        ([(1, 2), (2, 1)], InvalidInput),
        ([(1, 4)], InvalidVertex),
    ],
)
def test_explicit_rejects(edges, exc):
    with pytest.raises(exc):
        ExplicitGraph.from_edges(3, edges)


@pytest.mark.parametrize("w", [0, -2, 1.5])
def test_explicit_rejects_weights(w):
    with pytest.raises(BadWeight):
        ExplicitGraph.from_edges(2, [(1, 2, w)], weighted=True)


@given(graphs(weighted=True))
def test_adjacency_symmetric(g):
    for u in range(1, g.n + 1):
        for v, w in g.adjacency[u - 1]:
            assert (u, w) in g.adjacency[v - 1]


# --- properties ---------------------------------------------------------------


@given(graphs())
def test_bfs_matches_floyd_warshall(g):
    fw = floyd_warshall(g.n, list(g.edges()))
    assert [bfs_sssp(g, s).dist for s in range(1, g.n + 1)] == fw


@given(graphs(weighted=True))
def test_dijkstra_matches_floyd_warshall(g):
    fw = floyd_warshall(g.n, list(g.edges()))
    assert [dijkstra_sssp(g, s).dist for s in range(1, g.n + 1)] == fw


@given(graphs(weighted=True))
def test_symmetry_and_triangle(g):
    d = [r.dist for r in rows_of(g)]
    n = g.n
    for u in range(n):
        for v in range(n):
            assert d[u][v] == d[v][u]
            for w in range(n):
                if d[u][v] is not None and d[v][w] is not None:
                    assert d[u][w] <= d[u][v] + d[v][w]


@given(graphs(max_n=64))
def test_wiener_from_rows_equals_double_loop(g):
    rows = rows_of(g)
    matrix = [r.dist for r in rows]
    if any(None in row for row in matrix):
        with pytest.raises(DisconnectedGraph):
            wiener_from_rows(rows)
        return
    ordered = sum(matrix[u][v] for u in range(g.n) for v in range(g.n))
    assert wiener_from_rows(rows).value * 2 == ordered
    assert wiener_from_rows(rows).value == pairs_wiener(matrix)


@given(graphs(weighted=True), st.randoms(use_true_random=False))
def test_relabel_invariance(g, rnd):
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    try:
        expected = oracle_wiener(g)
    except DisconnectedGraph:
        with pytest.raises(DisconnectedGraph):
            oracle_wiener(h)
        return
    assert oracle_wiener(h) == expected


def test_counter_monotone():
    c = WorkCounter()
    seen = []
    for s in range(1, 6):
        bfs_sssp(path(5), s, c)
        seen.append(c.vertex_visits)
    assert seen == sorted(seen)
