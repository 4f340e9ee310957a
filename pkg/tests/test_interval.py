import pytest
from hypothesis import given
from hypothesis import strategies as st

from wig import interval
from wig.core import UNREACHABLE, WorkCounter, bfs_sssp, oracle_wiener
from wig.errors import DisconnectedGraph, InvalidInput, InvalidVertex
from wig.generate import GenSpec, generate
from wig.interval import IntervalRep, build_explicit, interval_edge, interval_sssp, interval_wiener

from oracles import floyd_warshall, predicate_edges
from strategies import interval_reps

P5 = IntervalRep([(1, 3), (2, 5), (4, 7), (6, 9), (8, 10)])


def rows(rep):
    return [interval_sssp(rep, s).dist for s in range(1, rep.n + 1)]


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 3), (3, 5), True), ((1, 3), (4, 7), False), ((2, 5), (1, 9), True)],
)
def test_edge(a, b, expected):
    rep = IntervalRep([a, b])
    assert interval_edge(rep, 1, 2) is expected
    assert interval_edge(rep, 2, 1) is expected


def test_edge_errors():
    with pytest.raises(InvalidVertex):
        interval_edge(P5, 1, 6)
    with pytest.raises(InvalidInput):
        interval_edge(P5, 2, 2)


def test_rejects_reversed_interval():
    with pytest.raises(InvalidInput):
        IntervalRep([(5, 3)])


def test_build_explicit_path():
    g = build_explicit(IntervalRep([(1, 2), (2, 3), (3, 4)]))
    assert sorted(g.edges()) == [(1, 2, 1), (2, 3, 1)]


def test_build_explicit_clique():
    g = build_explicit(IntervalRep([(1, 5), (5, 9), (0, 10)]))
    assert g.edge_count == 3


def test_build_explicit_single():
    assert build_explicit(IntervalRep([(4, 4)])).edge_count == 0


def test_sssp_chain():
    assert interval_sssp(P5, 1).dist == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("s", [1, 2, 3])
def test_sssp_clique(s):
    rep = IntervalRep([(1, 5), (5, 9), (0, 10)])
    row = interval_sssp(rep, s).dist
    assert row[s - 1] == 0 and sorted(row) == [0, 1, 1]


def test_sssp_disjoint():
    assert interval_sssp(IntervalRep([(0, 1), (3, 4)]), 1).dist == [0, UNREACHABLE]


def test_sssp_bad_source():
    with pytest.raises(InvalidVertex):
        interval_sssp(P5, 0)


def test_wiener_examples():
    assert interval_wiener(P5).value == 20
    assert interval_wiener(IntervalRep([(3, 7)] * 6)).value == 15
    assert interval_wiener(IntervalRep([(1, 2), (2, 3), (3, 4)])).value == 4


def test_wiener_disconnected():
    with pytest.raises(DisconnectedGraph):
        interval_wiener(IntervalRep([(0, 1), (3, 4)]))


@given(interval_reps())
def test_matches_bfs_oracle(rep):
    g = build_explicit(rep)
    for s in range(1, rep.n + 1):
        c = WorkCounter()
        assert interval_sssp(rep, s, c).dist == bfs_sssp(g, s).dist
        assert c.vertex_visits <= 8 * rep.n


@given(interval_reps(max_n=16, span=30, max_len=6))
def test_matches_floyd_warshall(rep):
    ivs = rep.intervals
    edges = predicate_edges(rep.n, lambda i, j: ivs[j - 1][0] <= ivs[i - 1][1] and ivs[i - 1][0] <= ivs[j - 1][1])
    assert rows(rep) == floyd_warshall(rep.n, edges)


@given(interval_reps(), st.integers(-1000, 1000), st.integers(1, 7))
def test_translation_and_scaling(rep, shift, scale):
    moved = IntervalRep([(scale * l + shift, scale * r + shift) for l, r in rep.intervals])
    assert rows(moved) == rows(rep)


@given(interval_reps(max_n=40), st.randoms(use_true_random=False))
def test_shuffle_permutes_rows(rep, rnd):
    order = list(range(rep.n))
    rnd.shuffle(order)
    shuffled = IntervalRep([rep.intervals[k] for k in order])
    a, b = rows(rep), rows(shuffled)
    for i in range(rep.n):
        for j in range(rep.n):
            assert b[i][j] == a[order[i]][order[j]]


@given(interval_reps(max_n=40))
def test_wiener_matches_oracle(rep):
    try:
        expected = oracle_wiener(build_explicit(rep))
    except DisconnectedGraph:
        with pytest.raises(DisconnectedGraph):
            interval_wiener(rep)
        return
    assert interval_wiener(rep) == expected


def test_wiener_never_builds_edges(monkeypatch):
    def boom(*a, **k):
        raise AssertionError("explicit graph constructed")

    monkeypatch.setattr(interval, "build_explicit", boom)
    monkeypatch.setattr(interval.ExplicitGraph, "from_edges", boom)
    assert interval_wiener(P5).value == 20


@pytest.mark.parametrize("n", [1024, 4096])
def test_visit_bound_large(n):
    rep = generate(GenSpec("interval", n, seed=11, connected=True)).rep
    for s in (1, n // 3, n):
        c = WorkCounter()
        interval_sssp(rep, s, c)
        assert c.vertex_visits <= 8 * n
