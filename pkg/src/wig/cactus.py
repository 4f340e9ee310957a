"""Weighted cactus graphs.

``validate_cactus`` splits the graph into blocks with one iterative DFS and
an edge stack.  Each block must be a single edge or a simple cycle; cycles
keep their vertices in walking order together with prefix weights, so the
shorter way round between any two of their vertices is an O(1) lookup.

``cactus_sssp`` walks the block-cut tree outward from the source.  A block is
entered once, through the vertex nearest the source, and every other vertex
of the block gets its distance from that entry vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Optional, Sequence, Union

from .core import (
    DistanceRow,
    ExplicitGraph,
    WienerValue,
    WorkCounter,
    WorkSummary,
    check_source,
    wiener_by_source,
)
from .errors import BadWeight, InvalidInput, InvalidVertex, NotCactus, NotConnected


@dataclass(frozen=True)
class CactusRep:
    n: int
    edges: tuple

    def __init__(self, n: int, edges: Sequence[Sequence[int]]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class EdgeBlock:
    u: int
    v: int
    w: int

    @property
    def vertices(self) -> tuple:
        return (self.u, self.v)


@dataclass(frozen=True)
class CycleBlock:
    order: tuple
    prefix: tuple  # prefix[i] = clockwise weight from order[0] to order[i]
    total: int

    @property
    def vertices(self) -> tuple:
        return self.order


Block = Union[EdgeBlock, CycleBlock]


@dataclass
class BlockCutTree:
    n: int
    blocks: list
    cut_vertices: frozenset
    # vertex -> ids of the blocks containing it; the block-cut tree adjacency
    member_of: list = field(repr=False)

    def tree_edges(self):
        """(block id, cut vertex) pairs of the block-cut tree."""
        return [(bid, v) for v in sorted(self.cut_vertices) for bid in self.member_of[v - 1]]


def _check_edges(rep: CactusRep) -> None:
    n = rep.n
    if n < 1:
        raise InvalidInput("a cactus needs at least one vertex")
    seen = set()
    for k, e in enumerate(rep.edges, 1):
        if len(e) != 3:
            raise InvalidInput(f"edge {k}: expected (u, v, w)")
        u, v, w = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidVertex(f"edge {k}: endpoint outside 1..{n}")
        if u == v:
            raise InvalidInput(f"edge {k}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidInput(f"edge {k}: duplicate edge {key}")
        seen.add(key)
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise BadWeight(f"edge {k}: weight {w!r} is not an integer >= 1")


def _biconnected_edge_sets(n: int, adj: list) -> tuple[list, set]:
    """Edge-index sets of the blocks plus the articulation points."""
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    time = 1
    disc[1] = low[1] = time
    estack: list[int] = []
    blocks = []
    cuts = set()
    root_children = 0
    # frames: (vertex, edge index used to enter, iterator position)
    stack = [(1, -1, 0)]
    while stack:
        u, via, pos = stack[-1]
        if pos < len(adj[u]):
            stack[-1] = (u, via, pos + 1)
            v, eid = adj[u][pos]
            if eid == via:
                continue
            if disc[v] == 0:
                time += 1
                disc[v] = low[v] = time
                estack.append(eid)
                stack.append((v, eid, 0))
                if u == 1:
                    root_children += 1
            elif disc[v] < disc[u]:
                estack.append(eid)
                low[u] = min(low[u], disc[v])
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    if p != 1:
                        cuts.add(p)
                    comp = []
                    while True:
                        eid = estack.pop()
                        comp.append(eid)
                        if eid == via:
                            break
                    blocks.append(comp)
    if root_children > 1:
        cuts.add(1)
    if any(disc[v] == 0 for v in range(1, n + 1)):
        missing = next(v for v in range(1, n + 1) if disc[v] == 0)
        raise NotConnected(f"vertex {missing} is not reachable from vertex 1")
    return blocks, cuts


def _cycle_block(edges: list) -> CycleBlock:
    nbrs: dict[int, list] = {}
    for u, v, w in edges:
        nbrs.setdefault(u, []).append((v, w))
        nbrs.setdefault(v, []).append((u, w))
    start = min(nbrs)
    order = [start]
    prefix = [0]
    prev, cur, acc = None, start, 0
    while True:
        (x, wx), (y, wy) = nbrs[cur]
        # walk toward the smaller neighbour first so the order is canonical
        if prev is None:
            nxt, w = (x, wx) if x < y else (y, wy)
        else:
            nxt, w = (y, wy) if x == prev else (x, wx)
        acc += w
        if nxt == start:
            break
        order.append(nxt)
        prefix.append(acc)
        prev, cur = cur, nxt
    return CycleBlock(tuple(order), tuple(prefix), acc)


def validate_cactus(rep: CactusRep) -> BlockCutTree:
    _check_edges(rep)
    n = rep.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for eid, (u, v, _) in enumerate(rep.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    comps, cuts = _biconnected_edge_sets(n, adj)
    blocks: list[Block] = []
    member_of: list[list[int]] = [[] for _ in range(n)]
    for comp in comps:
        edges = [rep.edges[e] for e in comp]
        verts = {x for u, v, _ in edges for x in (u, v)}
        if len(edges) == 1:
            block: Block = EdgeBlock(*edges[0])
        elif len(edges) == len(verts):
            block = _cycle_block(edges)
        else:
            raise NotCactus(
                f"block on vertices {sorted(verts)} has {len(edges)} edges "
                f"but {len(verts)} vertices; it is neither an edge nor a cycle"
            )
        for x in block.vertices:
            member_of[x - 1].append(len(blocks))
        blocks.append(block)
    return BlockCutTree(n, blocks, frozenset(cuts), member_of)


def to_explicit(rep: CactusRep) -> ExplicitGraph:
    return ExplicitGraph.from_edges(rep.n, rep.edges, weighted=True)


def cactus_sssp(bct: BlockCutTree, s: int, counter: Optional[WorkCounter] = None) -> DistanceRow:
    n = bct.n
    check_source(n, s)
    blocks = bct.blocks
    member_of = bct.member_of
    dist: list = [None] * n
    dist[s - 1] = 0
    entered = [False] * len(blocks)
    todo = [s]
    visits = 0
    while todo:
        x = todo.pop()
        visits += 1
        dx = dist[x - 1]
        for bid in member_of[x - 1]:
            if entered[bid]:
                continue
            entered[bid] = True
            block = blocks[bid]
            if isinstance(block, EdgeBlock):
                y = block.v if block.u == x else block.u
                dist[y - 1] = dx + block.w
                todo.append(y)
                visits += 1
                continue
            order, prefix, total = block.order, block.prefix, block.total
            px = prefix[order.index(x)]
            for y, py in zip(order, prefix):
                visits += 1
                if y == x:
                    continue
                cw = (py - px) % total
                dist[y - 1] = dx + min(cw, total - cw)
                todo.append(y)
    if counter is not None:
        counter.vertex_visits += visits
    return DistanceRow(s, dist)


def _row(bct: BlockCutTree, s: int, counter: WorkCounter) -> DistanceRow:
    return cactus_sssp(bct, s, counter)


def cactus_wiener(
    rep: CactusRep, *, parallel: bool = False, work: Optional[WorkSummary] = None
) -> WienerValue:
    bct = validate_cactus(rep)
    return wiener_by_source(rep.n, partial(_row, bct), parallel=parallel, work=work)
