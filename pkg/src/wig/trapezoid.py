"""Trapezoid graphs between two parallel lines.

A trapezoid (a, b, c, d) spans [a, b] on the top line and [c, d] on the
bottom line.  T_i lies strictly left of T_j when b_i < a_j and d_i < c_j;
two trapezoids are adjacent unless one lies strictly left of the other.

"Strictly left of" is transitive, which gives a constant-size test against a
whole connected set U: a trapezoid disjoint from every member of U must lie
left of all of them or right of all of them (if it sat right of u1 and left
of u2, every u1-u2 path in U would need an edge between a member left of it
and one right of it, and those never touch).  The BFS ball around the source
is connected, so an unreached trapezoid j joins the next layer iff

    (b_j >= min a  or  d_j >= min c)  and  (a_j <= max b  or  c_j <= max d)

with the extremes taken over the reached set.  The extremes only move
outward, so each half of the test becomes true once and stays true; four
cursors over the trapezoids sorted by b, d (descending) and a, c (ascending)
flip those flags, and each moves at most n times per source.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, partial
from typing import Optional, Sequence

from .core import (
    DistanceRow,
    ExplicitGraph,
    WienerValue,
    WorkCounter,
    WorkSummary,
    check_source,
    wiener_by_source,
)
from .errors import InvalidInput, InvalidVertex
from .interval import IntervalRep
from .permutation import PermutationRep


@dataclass(frozen=True)
class TrapezoidRep:
    traps: tuple

    def __init__(self, traps: Sequence[Sequence[int]]):
        traps = tuple(tuple(int(x) for x in t) for t in traps)
        for k, t in enumerate(traps, 1):
            if len(t) != 4:
                raise InvalidInput(f"trapezoid {k}: expected four corners, got {len(t)}")
            a, b, c, d = t
            if a > b or c > d:
                raise InvalidInput(f"trapezoid {k}: corners must satisfy a <= b and c <= d")
        object.__setattr__(self, "traps", traps)

    @property
    def n(self) -> int:
        return len(self.traps)

    @cached_property
    def _index(self):
        cols = [list(col) for col in zip(*self.traps)] if self.traps else [[], [], [], []]
        a, b, c, d = cols
        idx = range(self.n)
        by_b = sorted(idx, key=b.__getitem__, reverse=True)
        by_d = sorted(idx, key=d.__getitem__, reverse=True)
        by_a = sorted(idx, key=a.__getitem__)
        by_c = sorted(idx, key=c.__getitem__)
        return (
            a, b, c, d,
            by_b, [b[v] for v in by_b],
            by_d, [d[v] for v in by_d],
            by_a, [a[v] for v in by_a],
            by_c, [c[v] for v in by_c],
        )


def _left_of(ti, tj) -> bool:
    return ti[1] < tj[0] and ti[3] < tj[2]


def trap_edge(rep: TrapezoidRep, i: int, j: int) -> bool:
    n = rep.n
    for v in (i, j):
        if not 1 <= v <= n:
            raise InvalidVertex(f"vertex {v} outside 1..{n}")
    if i == j:
        raise InvalidInput("edge predicate needs two distinct vertices")
    ti, tj = rep.traps[i - 1], rep.traps[j - 1]
    return not _left_of(ti, tj) and not _left_of(tj, ti)


def build_explicit(rep: TrapezoidRep) -> ExplicitGraph:
    t = rep.traps
    n = rep.n
    edges = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if not _left_of(t[i], t[j]) and not _left_of(t[j], t[i])
    ]
    return ExplicitGraph.from_edges(n, edges)


def from_interval(rep: IntervalRep) -> TrapezoidRep:
    return TrapezoidRep([(l, r, l, r) for l, r in rep.intervals])


def from_permutation(rep: PermutationRep) -> TrapezoidRep:
    return TrapezoidRep([(i, i, p, p) for i, p in enumerate(rep.pinv, 1)])


def trap_sssp(rep: TrapezoidRep, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    n = rep.n
    check_source(n, s)
    (a, b, c, d,
     by_b, b_desc, by_d, d_desc,
     by_a, a_asc, by_c, c_asc) = rep._index
    src = s - 1
    dist: list = [None] * n
    dist[src] = 0
    not_left = [False] * n
    not_right = [False] * n
    min_a, max_b, min_c, max_d = a[src], b[src], c[src], d[src]
    pb = pd = pa = pc = 0
    k = 0
    assigned = 0
    peak = 0
    while True:
        nxt = k + 1
        layer = []
        start = pb + pd + pa + pc
        while pb < n and b_desc[pb] >= min_a:
            v = by_b[pb]
            pb += 1
            if not not_left[v]:
                not_left[v] = True
                if not_right[v] and dist[v] is None:
                    dist[v] = nxt
                    layer.append(v)
        while pd < n and d_desc[pd] >= min_c:
            v = by_d[pd]
            pd += 1
            if not not_left[v]:
                not_left[v] = True
                if not_right[v] and dist[v] is None:
                    dist[v] = nxt
                    layer.append(v)
        while pa < n and a_asc[pa] <= max_b:
            v = by_a[pa]
            pa += 1
            if not not_right[v]:
                not_right[v] = True
                if not_left[v] and dist[v] is None:
                    dist[v] = nxt
                    layer.append(v)
        while pc < n and c_asc[pc] <= max_d:
            v = by_c[pc]
            pc += 1
            if not not_right[v]:
                not_right[v] = True
                if not_left[v] and dist[v] is None:
                    dist[v] = nxt
                    layer.append(v)
        peak = max(peak, pb + pd + pa + pc - start + len(layer))
        if not layer:
            break
        k = nxt
        assigned += len(layer)
        for v in layer:
            if a[v] < min_a:
                min_a = a[v]
            if b[v] > max_b:
                max_b = b[v]
            if c[v] < min_c:
                min_c = c[v]
            if d[v] > max_d:
                max_d = d[v]
    if counter is not None:
        counter.vertex_visits += pb + pd + pa + pc + assigned
        counter.layer_count += k
        counter.peak_layer_visits = max(counter.peak_layer_visits, peak)
    return DistanceRow(s, dist)


def _row(rep: TrapezoidRep, s: int, counter: WorkCounter) -> DistanceRow:
    return trap_sssp(rep, s, counter)


def trap_wiener(
    rep: TrapezoidRep, *, parallel: bool = False, work: Optional[WorkSummary] = None
) -> WienerValue:
    return wiener_by_source(rep.n, partial(_row, rep), parallel=parallel, work=work)
