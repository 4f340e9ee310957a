"""Explicit graphs, oracle shortest paths and the exact Wiener accumulator.

Vertices are numbered 1..n everywhere in the public API.  Distance rows are
plain lists indexed by ``v - 1`` whose entries are non-negative ints, or
``UNREACHABLE`` (``None``) for vertices in another component.
"""

from __future__ import annotations

import heapq
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import BadWeight, DisconnectedGraph, InvalidInput, InvalidVertex, WienerOverflow

UNREACHABLE = None

# Unsigned 64-bit accumulator; anything larger is reported, never wrapped.
WIENER_MAX = 2**64 - 1


@dataclass
class WorkCounter:
    """Vertex-touch instrumentation for a single SSSP run."""

    vertex_visits: int = 0
    layer_count: int = 0
    peak_layer_visits: int = 0


@dataclass
class WorkSummary:
    """Aggregate of the WorkCounters of many SSSP runs."""

    sources: int = 0
    total_visits: int = 0
    max_visits: int = 0
    max_layer_visits: int = 0
    max_layers: int = 0

    def add(self, c: WorkCounter) -> None:
        self.sources += 1
        self.total_visits += c.vertex_visits
        self.max_visits = max(self.max_visits, c.vertex_visits)
        self.max_layer_visits = max(self.max_layer_visits, c.peak_layer_visits)
        self.max_layers = max(self.max_layers, c.layer_count)

    def merge(self, other: WorkSummary) -> None:
        self.sources += other.sources
        self.total_visits += other.total_visits
        self.max_visits = max(self.max_visits, other.max_visits)
        self.max_layer_visits = max(self.max_layer_visits, other.max_layer_visits)
        self.max_layers = max(self.max_layers, other.max_layers)


@dataclass
class DistanceRow:
    source: int
    dist: list

    def __post_init__(self) -> None:
        if self.dist[self.source - 1] != 0:
            raise InvalidInput("distance from the source to itself must be 0")

    def __getitem__(self, v: int):
        return self.dist[v - 1]

    @property
    def connected(self) -> bool:
        return UNREACHABLE not in self.dist


@dataclass(frozen=True)
class WienerValue:
    """Exact sum of d(u, v) over unordered pairs."""

    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise InvalidInput("Wiener value cannot be negative")
        if self.value > WIENER_MAX:
            raise WienerOverflow(f"Wiener value exceeds {WIENER_MAX}")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass
class ExplicitGraph:
    n: int
    adjacency: list = field(repr=False)
    weighted: bool = False

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], weighted: bool = False) -> ExplicitGraph:
        """Build from (u, v) pairs, or (u, v, w) triples when ``weighted``."""
        if n < 0:
            raise InvalidInput("vertex count must be non-negative")
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        seen = set()
        for e in edges:
            if weighted:
                u, v, w = e
                if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                    raise BadWeight(f"edge ({u}, {v}) has weight {w!r}; weights must be integers >= 1")
            else:
                u, v = e
                w = 1
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidInput(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adjacency[u - 1].append((v, w))
            adjacency[v - 1].append((u, w))
        return cls(n, adjacency, weighted)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for u in range(1, self.n + 1):
            for v, w in self.adjacency[u - 1]:
                if u < v:
                    yield u, v, w

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def relabel(self, perm: Sequence[int]) -> ExplicitGraph:
        """Return the graph with vertex v renamed to perm[v - 1]."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise InvalidInput("relabeling must be a permutation of 1..n")
        if self.weighted:
            edges = [(perm[u - 1], perm[v - 1], w) for u, v, w in self.edges()]
        else:
            edges = [(perm[u - 1], perm[v - 1]) for u, v, _ in self.edges()]
        return ExplicitGraph.from_edges(self.n, edges, weighted=self.weighted)


def check_source(n: int, s: int) -> None:
    if not isinstance(s, int) or not 1 <= s <= n:
        raise InvalidVertex(f"source {s!r} outside 1..{n}")


def bfs_sssp(g: ExplicitGraph, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    if g.weighted:
        raise InvalidInput("bfs_sssp requires an unweighted graph; use dijkstra_sssp")
    check_source(g.n, s)
    dist: list = [UNREACHABLE] * g.n
    dist[s - 1] = 0
    queue = deque([s])
    visits = 0
    layers = 0
    while queue:
        u = queue.popleft()
        visits += 1
        du = dist[u - 1]
        for v, _ in g.adjacency[u - 1]:
            if dist[v - 1] is None:
                dist[v - 1] = du + 1
                layers = max(layers, du + 1)
                queue.append(v)
    if counter is not None:
        counter.vertex_visits += visits
        counter.layer_count += layers
    return DistanceRow(s, dist)


def dijkstra_sssp(g: ExplicitGraph, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    check_source(g.n, s)
    dist: list = [UNREACHABLE] * g.n
    dist[s - 1] = 0
    done = [False] * g.n
    heap = [(0, s)]
    visits = 0
    while heap:
        d, u = heapq.heappop(heap)
        if done[u - 1]:
            continue
        done[u - 1] = True
        visits += 1
        for v, w in g.adjacency[u - 1]:
            nd = d + w
            old = dist[v - 1]
            if old is None or nd < old:
                dist[v - 1] = nd
                heapq.heappush(heap, (nd, v))
    if counter is not None:
        counter.vertex_visits += visits
    return DistanceRow(s, dist)


def oracle_sssp(g: ExplicitGraph, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    return dijkstra_sssp(g, s, counter) if g.weighted else bfs_sssp(g, s, counter)


def wiener_from_rows(rows: Sequence[DistanceRow]) -> WienerValue:
    n = len(rows)
    if sorted(r.source for r in rows) != list(range(1, n + 1)):
        raise InvalidInput("rows must cover every source 1..n exactly once")
    total = 0
    for r in rows:
        if len(r.dist) != n:
            raise InvalidInput(f"row for source {r.source} has {len(r.dist)} entries, expected {n}")
        if UNREACHABLE in r.dist:
            raise DisconnectedGraph(f"disconnected: vertex {r.dist.index(None) + 1} unreachable from {r.source}")
        total += sum(r.dist)
    if total % 2:
        raise InvalidInput("ordered distance sum is odd; rows are not symmetric")
    return WienerValue(total // 2)


def _row_sums(sssp: Callable[[int, WorkCounter], DistanceRow], sources: Iterable[int]) -> tuple[int, WorkSummary]:
    total = 0
    summary = WorkSummary()
    for s in sources:
        counter = WorkCounter()
        dist = sssp(s, counter).dist
        if UNREACHABLE in dist:
            raise DisconnectedGraph(f"disconnected: vertex {dist.index(None) + 1} unreachable from {s}")
        total += sum(dist)
        summary.add(counter)
    return total, summary


def wiener_by_source(
    n: int,
    sssp: Callable[[int, WorkCounter], DistanceRow],
    *,
    parallel: bool = False,
    workers: Optional[int] = None,
    work: Optional[WorkSummary] = None,
) -> WienerValue:
    """Run ``sssp`` from every source and halve the ordered distance sum.

    Rows are reduced as they are produced, so memory stays O(n).  With
    ``parallel`` the sources are split into contiguous chunks and farmed out
    to a process pool; ``sssp`` must then be picklable.
    """
    if parallel and n > 1:
        workers = workers or os.cpu_count() or 1
        nchunks = min(n, 4 * workers)
        with ProcessPoolExecutor(workers) as ex:
            bounds = [1 + (n * i) // nchunks for i in range(nchunks + 1)]
            chunks = [range(bounds[i], bounds[i + 1]) for i in range(nchunks)]
            parts = list(ex.map(_row_sums, [sssp] * nchunks, chunks))
    else:
        parts = [_row_sums(sssp, range(1, n + 1))]
    ordered = 0
    for total, summary in parts:
        ordered += total
        if work is not None:
            work.merge(summary)
    if ordered % 2:
        raise InvalidInput("ordered distance sum is odd; the SSSP routine is not symmetric")
    return WienerValue(ordered // 2)


def distance_matrix(n: int, sssp: Callable[[int, WorkCounter], DistanceRow]) -> list[DistanceRow]:
    return [sssp(s, WorkCounter()) for s in range(1, n + 1)]


def _oracle_row(g: ExplicitGraph, s: int, counter: WorkCounter) -> DistanceRow:
    return oracle_sssp(g, s, counter)


def oracle_wiener(
    g: ExplicitGraph, *, parallel: bool = False, work: Optional[WorkSummary] = None
) -> WienerValue:
    return wiener_by_source(g.n, partial(_oracle_row, g), parallel=parallel, work=work)
