"""Interval graphs: closed integer intervals, BFS by span expansion.

The union of all intervals within distance k of the source is a single
interval [L_k, R_k].  An unreached interval is at distance k + 1 exactly when
it meets that span.  Two cursors discover candidates: one over intervals
sorted by left endpoint (advancing while l <= R_k) and one over intervals
sorted by right endpoint descending (advancing while r >= L_k).  Every
interval that meets the span has been passed by both cursors, and whichever
passes it last admits it, so each cursor moves at most n times per source.
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

INT63 = 2**63


@dataclass(frozen=True)
class IntervalRep:
    intervals: tuple

    def __init__(self, intervals: Sequence[Sequence[int]]):
        ivs = tuple((int(l), int(r)) for l, r in intervals)
        for k, (l, r) in enumerate(ivs, 1):
            if l > r:
                raise InvalidInput(f"interval {k}: left endpoint {l} exceeds right endpoint {r}")
            if not (-INT63 <= l < INT63 and -INT63 <= r < INT63):
                raise InvalidInput(f"interval {k}: endpoint outside the signed 63-bit range")
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self) -> int:
        return len(self.intervals)

    @cached_property
    def _index(self):
        lefts = [l for l, _ in self.intervals]
        rights = [r for _, r in self.intervals]
        by_left = sorted(range(self.n), key=lefts.__getitem__)
        by_right = sorted(range(self.n), key=rights.__getitem__, reverse=True)
        return (
            lefts,
            rights,
            by_left,
            [lefts[v] for v in by_left],
            by_right,
            [rights[v] for v in by_right],
        )


def _check_pair(n: int, i: int, j: int) -> None:
    for v in (i, j):
        if not 1 <= v <= n:
            raise InvalidVertex(f"vertex {v} outside 1..{n}")
    if i == j:
        raise InvalidInput("edge predicate needs two distinct vertices")


def interval_edge(rep: IntervalRep, i: int, j: int) -> bool:
    _check_pair(rep.n, i, j)
    li, ri = rep.intervals[i - 1]
    lj, rj = rep.intervals[j - 1]
    return lj <= ri and li <= rj


def build_explicit(rep: IntervalRep) -> ExplicitGraph:
    ivs = rep.intervals
    n = rep.n
    edges = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if ivs[j][0] <= ivs[i][1] and ivs[i][0] <= ivs[j][1]
    ]
    return ExplicitGraph.from_edges(n, edges)


def interval_sssp(rep: IntervalRep, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    n = rep.n
    check_source(n, s)
    lefts, rights, by_left, left_sorted, by_right, right_sorted = rep._index
    dist: list = [None] * n
    dist[s - 1] = 0
    lo, hi = lefts[s - 1], rights[s - 1]
    i = j = 0
    k = 0
    assigned = 0
    while True:
        layer = []
        while i < n and left_sorted[i] <= hi:
            v = by_left[i]
            i += 1
            if dist[v] is None and rights[v] >= lo:
                dist[v] = k + 1
                layer.append(v)
        while j < n and right_sorted[j] >= lo:
            v = by_right[j]
            j += 1
            if dist[v] is None and lefts[v] <= hi:
                dist[v] = k + 1
                layer.append(v)
        if not layer:
            break
        k += 1
        assigned += len(layer)
        new_lo = min(lefts[v] for v in layer)
        new_hi = max(rights[v] for v in layer)
        # the reached union only ever grows
        assert new_lo <= hi and new_hi >= lo
        lo = min(lo, new_lo)
        hi = max(hi, new_hi)
    if counter is not None:
        counter.vertex_visits += i + j + assigned
        counter.layer_count += k
    return DistanceRow(s, dist)


def _row(rep: IntervalRep, s: int, counter: WorkCounter) -> DistanceRow:
    return interval_sssp(rep, s, counter)


def interval_wiener(
    rep: IntervalRep, *, parallel: bool = False, work: Optional[WorkSummary] = None
) -> WienerValue:
    return wiener_by_source(rep.n, partial(_row, rep), parallel=parallel, work=work)
