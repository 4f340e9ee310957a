import pytest
from hypothesis import given

from wig import trapezoid
from wig.core import UNREACHABLE, WorkCounter, bfs_sssp, oracle_wiener
from wig.errors import DisconnectedGraph, InvalidInput, InvalidVertex
from wig.generate import GenSpec, generate
from wig.interval import IntervalRep, interval_edge, interval_sssp, interval_wiener
from wig.permutation import PermutationRep, perm_edge, perm_sssp, perm_wiener
from wig.trapezoid import (
    TrapezoidRep,
    build_explicit,
    from_interval,
    from_permutation,
    trap_edge,
    trap_sssp,
    trap_wiener,
)

from oracles import floyd_warshall, predicate_edges, trapezoids_meet_geometrically
from strategies import interval_reps, permutation_reps, trapezoid_reps

PATH3 = TrapezoidRep([(1, 2, 1, 2), (4, 5, 4, 5), (3, 4, 2, 3)])


def rows(rep):
    return [trap_sssp(rep, s).dist for s in range(1, rep.n + 1)]


@pytest.mark.parametrize("i, j, expected", [(1, 2, False), (1, 3, True), (3, 2, True)])
def test_edge_examples(i, j, expected):
    assert trap_edge(PATH3, i, j) is expected
    assert trapezoids_meet_geometrically(PATH3.traps[i - 1], PATH3.traps[j - 1]) is expected


def test_edge_errors():
    with pytest.raises(InvalidVertex):
        trap_edge(PATH3, 0, 1)
    with pytest.raises(InvalidInput):
        trap_edge(PATH3, 3, 3)


@pytest.mark.parametrize("t", [(2, 1, 0, 0), (0, 0, 3, 2), (1, 2, 3)])
def test_rejects_bad_corners(t):
    with pytest.raises(InvalidInput):
        TrapezoidRep([t])


@given(trapezoid_reps(max_n=10, span=12, max_len=4))
def test_edge_symmetric_and_geometric(rep):
    for i in range(1, rep.n + 1):
        for j in range(i + 1, rep.n + 1):
            e = trap_edge(rep, i, j)
            assert e == trap_edge(rep, j, i)
            assert e == trapezoids_meet_geometrically(rep.traps[i - 1], rep.traps[j - 1])


def test_sssp_examples():
    assert trap_sssp(PATH3, 1).dist == [0, 2, 1]
    fan = TrapezoidRep([(5, 5, 0, 1), (0, 5, 7, 9), (5, 9, 3, 3), (2, 6, 8, 8)])
    assert trap_sssp(fan, 1).dist == [0, 1, 1, 1]
    assert trap_sssp(TrapezoidRep([(0, 1, 0, 1), (2, 3, 2, 3)]), 1).dist == [0, UNREACHABLE]


def test_sssp_bad_source():
    with pytest.raises(InvalidVertex):
        trap_sssp(PATH3, 4)


def test_wiener_examples():
    assert trap_wiener(PATH3).value == 4
    p5 = IntervalRep([(1, 3), (2, 5), (4, 7), (6, 9), (8, 10)])
    assert trap_wiener(from_interval(p5)).value == 20
    assert trap_wiener(from_permutation(PermutationRep.reverse(4))).value == 6


def test_wiener_disconnected():
    with pytest.raises(DisconnectedGraph):
        trap_wiener(TrapezoidRep([(0, 1, 0, 1), (2, 3, 2, 3)]))


def test_from_interval_examples():
    assert from_interval(IntervalRep([(1, 3)])).traps == ((1, 3, 1, 3),)
    assert from_interval(IntervalRep([])).n == 0


def test_from_permutation_examples():
    p = PermutationRep([3, 1, 2])
    t = from_permutation(p)
    assert t.traps[0] == (1, 1, 2, 2)
    assert trap_wiener(t).value == perm_wiener(p).value == 4
    rev = from_permutation(PermutationRep.reverse(5))
    assert all(trap_edge(rev, i, j) for i in range(1, 6) for j in range(i + 1, 6))


@given(interval_reps(max_n=30))
def test_interval_predicate_agrees(ivs):
    t = from_interval(ivs)
    for i in range(1, ivs.n + 1):
        for j in range(i + 1, ivs.n + 1):
            assert trap_edge(t, i, j) == interval_edge(ivs, i, j)
    assert rows(t) == [interval_sssp(ivs, s).dist for s in range(1, ivs.n + 1)]


@given(permutation_reps(max_n=30))
def test_permutation_predicate_agrees(p):
    t = from_permutation(p)
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            assert trap_edge(t, i, j) == perm_edge(p, i, j)
    assert rows(t) == [perm_sssp(p, s).dist for s in range(1, p.n + 1)]


def _same_wiener(native, rep, fn):
    try:
        expected = native(rep)
    except DisconnectedGraph:
        with pytest.raises(DisconnectedGraph):
            fn(rep)
        return
    assert fn(rep) == expected


@given(interval_reps(max_n=40))
def test_interval_embedding_wiener(ivs):
    _same_wiener(interval_wiener, ivs, lambda r: trap_wiener(from_interval(r)))


@given(permutation_reps(max_n=40))
def test_permutation_embedding_wiener(p):
    _same_wiener(perm_wiener, p, lambda r: trap_wiener(from_permutation(r)))


@given(trapezoid_reps())
def test_matches_bfs_oracle(rep):
    g = build_explicit(rep)
    for s in range(1, rep.n + 1):
        c = WorkCounter()
        assert trap_sssp(rep, s, c).dist == bfs_sssp(g, s).dist
        assert c.peak_layer_visits <= 8 * rep.n
        assert c.vertex_visits <= 8 * rep.n


@given(trapezoid_reps(max_n=12, span=16, max_len=5))
def test_matches_floyd_warshall(rep):
    t = rep.traps
    edges = predicate_edges(rep.n, lambda i, j: trapezoids_meet_geometrically(t[i - 1], t[j - 1]))
    assert rows(rep) == floyd_warshall(rep.n, edges)


@given(trapezoid_reps(max_n=40))
def test_wiener_matches_oracle(rep):
    _same_wiener(lambda r: oracle_wiener(build_explicit(r)), rep, trap_wiener)


def test_wiener_never_builds_edges(monkeypatch):
    def boom(*a, **k):
        raise AssertionError("explicit graph constructed")

    monkeypatch.setattr(trapezoid, "build_explicit", boom)
    monkeypatch.setattr(trapezoid.ExplicitGraph, "from_edges", boom)
    assert trap_wiener(PATH3).value == 4


@pytest.mark.parametrize("n", [1024, 4096])
def test_visit_bound_large(n):
    rep = generate(GenSpec("trapezoid", n, seed=9, connected=True)).rep
    for s in (1, n // 2, n):
        c = WorkCounter()
        trap_sssp(rep, s, c)
        assert c.vertex_visits <= 8 * n
