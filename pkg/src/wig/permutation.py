"""Permutation graphs from a two-line crossing diagram.

``pi[p]`` is the number written at lower-line position p, ``pinv[i]`` the
lower position of number i (both 1-based).  Numbers i and j are adjacent iff
their segments cross: (i - j) * (pinv[i] - pinv[j]) < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from itertools import accumulate
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


@dataclass(frozen=True)
class PermutationRep:
    pi: tuple
    pinv: tuple

    def __init__(self, pi: Sequence[int]):
        pi = tuple(int(x) for x in pi)
        n = len(pi)
        if sorted(pi) != list(range(1, n + 1)):
            raise InvalidInput(f"pi is not a permutation of 1..{n}")
        pinv = [0] * n
        for p, x in enumerate(pi, 1):
            pinv[x - 1] = p
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "pinv", tuple(pinv))

    @property
    def n(self) -> int:
        return len(self.pi)

    @classmethod
    def reverse(cls, n: int) -> PermutationRep:
        return cls(range(n, 0, -1))

    @classmethod
    def identity(cls, n: int) -> PermutationRep:
        return cls(range(1, n + 1))


def perm_edge(rep: PermutationRep, i: int, j: int) -> bool:
    n = rep.n
    for v in (i, j):
        if not 1 <= v <= n:
            raise InvalidVertex(f"vertex {v} outside 1..{n}")
    if i == j:
        raise InvalidInput("edge predicate needs two distinct vertices")
    return (i - j) * (rep.pinv[i - 1] - rep.pinv[j - 1]) < 0


def build_explicit(rep: PermutationRep) -> ExplicitGraph:
    pinv = rep.pinv
    n = rep.n
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if pinv[i] > pinv[j]]
    return ExplicitGraph.from_edges(n, edges)


def perm_sssp(rep: PermutationRep, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    """Layered BFS without edges.

    For each layer, ``below[j]`` is the largest lower position among frontier
    numbers smaller than j and ``above[j]`` the smallest among frontier
    numbers larger than j.  Unreached j crosses some frontier segment iff
    pinv[j] < below[j] or pinv[j] > above[j].  Both arrays are rebuilt per
    layer, so a source costs O(n) per layer.
    """
    n = rep.n
    check_source(n, s)
    pinv = rep.pinv
    dist: list = [None] * n
    dist[s - 1] = 0
    frontier = [s - 1]
    remaining = [v for v in range(n) if v != s - 1]
    k = 0
    visits = 1
    peak = 0
    big = n + 1
    while frontier and remaining:
        low = [0] * n
        high = [big] * n
        for v in frontier:
            low[v] = pinv[v]
            high[v] = pinv[v]
        # below[j] covers numbers < j+1, i.e. indices 0..j-1
        below = [0, *accumulate(low[:-1], max)]
        above = [*accumulate(reversed(high[1:]), min)][::-1] + [big]
        layer_visits = 2 * n + len(remaining)
        k += 1
        frontier = []
        rest = []
        for v in remaining:
            p = pinv[v]
            if p < below[v] or p > above[v]:
                dist[v] = k
                frontier.append(v)
            else:
                rest.append(v)
        remaining = rest
        visits += layer_visits
        peak = max(peak, layer_visits)
        if not frontier:
            k -= 1
    if counter is not None:
        counter.vertex_visits += visits
        counter.layer_count += k
        counter.peak_layer_visits = max(counter.peak_layer_visits, peak)
    return DistanceRow(s, dist)


def _row(rep: PermutationRep, s: int, counter: WorkCounter) -> DistanceRow:
    return perm_sssp(rep, s, counter)


def perm_wiener(
    rep: PermutationRep, *, parallel: bool = False, work: Optional[WorkSummary] = None
) -> WienerValue:
    return wiener_by_source(rep.n, partial(_row, rep), parallel=parallel, work=work)
