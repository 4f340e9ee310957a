"""Circular-arc graphs on a discretized circle of circumference C.

An arc (s, e) covers the closed clockwise range from s to e, wrapping past 0
when e < s.  Two closed arcs meet iff the start of one lies on the other.

SSSP keeps the reached union as one unrolled range [lo, hi] with
hi - lo < C.  Layer 1 is found by a direct scan.  After that, any unreached
arc meeting the union has a start or an end inside the part added by the
previous layer (an arc spanning the whole union would already meet the
source arc), so four cursors walk sorted starts and sorted ends outward
from both frontiers.  The regions they cover are disjoint until the union
closes the circle, at which point every arc left over joins the next layer.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
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


@dataclass(frozen=True)
class ArcRep:
    circumference: int
    arcs: tuple

    def __init__(self, circumference: int, arcs: Sequence[Sequence[int]]):
        C = int(circumference)
        if C < 2:
            raise InvalidInput("circumference must be at least 2")
        arcs = tuple((int(s), int(e)) for s, e in arcs)
        for k, (s, e) in enumerate(arcs, 1):
            if not (0 <= s < C and 0 <= e < C):
                raise InvalidInput(f"arc {k}: endpoints must lie in [0, {C})")
            if s == e:
                raise InvalidInput(f"arc {k}: start equals end; full-circle arcs are not representable")
        object.__setattr__(self, "circumference", C)
        object.__setattr__(self, "arcs", arcs)

    @property
    def n(self) -> int:
        return len(self.arcs)

    @cached_property
    def _index(self):
        C = self.circumference
        n = self.n
        starts = [s for s, _ in self.arcs]
        lengths = [(e - s) % C for s, e in self.arcs]
        ends = [e for _, e in self.arcs]
        by_start = sorted(range(n), key=starts.__getitem__)
        by_end = sorted(range(n), key=ends.__getitem__)
        # Sorted positions unrolled over three turns, [-C, 2C), between two
        # sentinels.  The reached range starts inside [0, C) and stays inside
        # (-C, 2C) until it closes the circle, so cursors never pass a sentinel.
        lo_guard, hi_guard = -2 * C - 1, 3 * C
        start_pos = [lo_guard] + [starts[v] + t * C for t in (-1, 0, 1) for v in by_start] + [hi_guard]
        end_pos = [lo_guard] + [ends[v] + t * C for t in (-1, 0, 1) for v in by_end] + [hi_guard]
        return (
            starts,
            lengths,
            [-1] + by_start * 3 + [-1],
            start_pos,
            [-1] + by_end * 3 + [-1],
            end_pos,
        )


def _meets(C: int, s1: int, len1: int, s2: int, len2: int) -> bool:
    return (s2 - s1) % C <= len1 or (s1 - s2) % C <= len2


def arc_edge(rep: ArcRep, i: int, j: int) -> bool:
    n = rep.n
    for v in (i, j):
        if not 1 <= v <= n:
            raise InvalidVertex(f"vertex {v} outside 1..{n}")
    if i == j:
        raise InvalidInput("edge predicate needs two distinct vertices")
    C = rep.circumference
    si, ei = rep.arcs[i - 1]
    sj, ej = rep.arcs[j - 1]
    return _meets(C, si, (ei - si) % C, sj, (ej - sj) % C)


def build_explicit(rep: ArcRep) -> ExplicitGraph:
    C = rep.circumference
    starts, lengths = rep._index[:2]
    n = rep.n
    edges = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if _meets(C, starts[i], lengths[i], starts[j], lengths[j])
    ]
    return ExplicitGraph.from_edges(n, edges)


def from_interval(rep: IntervalRep) -> ArcRep:
    """Place an interval model on a circle large enough that nothing wraps.

    Intervals are shifted to start at 0, giving endpoints in [0, M], and the
    circle has C = M + 2.  Arcs cannot be single points, so when some
    interval is degenerate every coordinate is doubled and each right
    endpoint pushed out by one (C = 2M + 3); integer touching is preserved.
    """
    if rep.n == 0:
        return ArcRep(2, [])
    base = min(l for l, _ in rep.intervals)
    shifted = [(l - base, r - base) for l, r in rep.intervals]
    top = max(r for _, r in shifted)
    if all(l < r for l, r in shifted):
        return ArcRep(top + 2, shifted)
    return ArcRep(2 * top + 3, [(2 * l, 2 * r + 1) for l, r in shifted])


def circ_sssp(rep: ArcRep, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    n = rep.n
    check_source(n, s)
    C = rep.circumference
    starts, lengths, by_start, start_sorted, by_end, end_sorted = rep._index
    dist: list = [None] * n
    src = s - 1
    dist[src] = 0
    lo = starts[src]
    hi = lo + lengths[src]
    visits = 0

    def extend(layer, lo, hi):
        # grow [lo, hi] by arcs known to meet it, in the same unrolled frame
        new_lo, new_hi = lo, hi
        span = hi - lo
        for v in layer:
            off = (starts[v] - lo) % C
            if off <= span:
                a = lo + off
            else:
                a = lo + off - C
                if a < new_lo:
                    new_lo = a
            b = a + lengths[v]
            if b > new_hi:
                new_hi = b
        return new_lo, new_hi

    layer = []
    span = hi - lo
    for v in range(n):
        visits += 1
        if v != src and ((starts[v] - lo) % C <= span or (lo - starts[v]) % C <= lengths[v]):
            dist[v] = 1
            layer.append(v)
    k = 0
    if layer:
        k = 1
        s_cw = bisect_right(start_sorted, hi)
        e_cw = bisect_right(end_sorted, hi)
        s_ccw = bisect_left(start_sorted, lo) - 1
        e_ccw = bisect_left(end_sorted, lo) - 1
        lo, hi = extend(layer, lo, hi)

    while layer:
        if hi - lo >= C:
            layer = []
            for v in range(n):
                visits += 1
                if dist[v] is None:
                    dist[v] = k + 1
                    layer.append(v)
            if layer:
                k += 1
            break
        layer = []
        nxt = k + 1
        first = s_cw
        while start_sorted[s_cw] <= hi:
            v = by_start[s_cw]
            s_cw += 1
            if dist[v] is None:
                dist[v] = nxt
                layer.append(v)
        visits += s_cw - first
        first = e_cw
        while end_sorted[e_cw] <= hi:
            v = by_end[e_cw]
            e_cw += 1
            if dist[v] is None:
                dist[v] = nxt
                layer.append(v)
        visits += e_cw - first
        first = s_ccw
        while start_sorted[s_ccw] >= lo:
            v = by_start[s_ccw]
            s_ccw -= 1
            if dist[v] is None:
                dist[v] = nxt
                layer.append(v)
        visits += first - s_ccw
        first = e_ccw
        while end_sorted[e_ccw] >= lo:
            v = by_end[e_ccw]
            e_ccw -= 1
            if dist[v] is None:
                dist[v] = nxt
                layer.append(v)
        visits += first - e_ccw
        if layer:
            k = nxt
            lo, hi = extend(layer, lo, hi)
    if counter is not None:
        counter.vertex_visits += visits
        counter.layer_count += k
    return DistanceRow(s, dist)


def _row(rep: ArcRep, s: int, counter: WorkCounter) -> DistanceRow:
    return circ_sssp(rep, s, counter)


def circ_wiener(rep: ArcRep, *, parallel: bool = False, work: Optional[WorkSummary] = None) -> WienerValue:
    return wiener_by_source(rep.n, partial(_row, rep), parallel=parallel, work=work)
