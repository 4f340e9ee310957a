"""Seeded random instance generators.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014) so that a
GenSpec reproduces the same document in any language:

    state = state + 0x9E3779B97F4A7C15                       (mod 2**64)
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9         (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB                 (mod 2**64)
    out = z ^ (z >> 31)

Bounded draws use rejection (discard outputs >= 2**64 - 2**64 % bound, then
take the remainder).  A Bernoulli(p) draw compares (out >> 11) / 2**53 < p.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from .cactus import CactusRep
from .circular_arc import ArcRep, circ_sssp
from .errors import GenerationFailed, InvalidInput
from .formats import KINDS, InputDocument
from .interval import IntervalRep, interval_sssp
from .permutation import PermutationRep, perm_sssp
from .trapezoid import TrapezoidRep, trap_sssp

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        return (self.next() >> 11) / 2.0**53 < p

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


@dataclass
class GenSpec:
    kind: str
    n: int
    seed: int = 0
    # endpoint range [0, span) for intervals and trapezoids; circumference for arcs
    span: Optional[int] = None
    max_len: Optional[int] = None
    wrap_prob: float = 0.25
    cycle_min: int = 3
    cycle_max: int = 8
    edge_prob: float = 0.5
    weight_min: int = 1
    weight_max: int = 9
    connected: bool = False
    max_retries: int = 64

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown class {self.kind!r}")
        if self.n < 1:
            raise InvalidInput("n must be at least 1")
        if not 3 <= self.cycle_min <= self.cycle_max:
            raise InvalidInput("cycle lengths need 3 <= cycle_min <= cycle_max")
        if not 1 <= self.weight_min <= self.weight_max:
            raise InvalidInput("weights need 1 <= weight_min <= weight_max")

    def resolved_span(self) -> int:
        return self.span if self.span is not None else max(3, 4 * self.n)

    def resolved_max_len(self) -> int:
        if self.max_len is not None:
            return self.max_len
        # long enough that the default instances are connected with high probability
        return 16 + 8 * math.ceil(math.log2(self.n + 1))


def _intervals(rng: SplitMix64, spec: GenSpec) -> IntervalRep:
    span, max_len = spec.resolved_span(), spec.resolved_max_len()
    out = []
    for _ in range(spec.n):
        l = rng.below(span)
        out.append((l, l + rng.between(0, max_len)))
    return IntervalRep(out)


def _arcs(rng: SplitMix64, spec: GenSpec) -> ArcRep:
    C = spec.resolved_span()
    max_len = max(1, min(spec.resolved_max_len(), C - 1))
    out = []
    for _ in range(spec.n):
        length = rng.between(1, max_len)
        if rng.chance(spec.wrap_prob):
            s = rng.between(C - length, C - 1)
        else:
            s = rng.between(0, C - 1 - length)
        out.append((s, (s + length) % C))
    return ArcRep(C, out)


def _permutation(rng: SplitMix64, spec: GenSpec) -> PermutationRep:
    pi = list(range(1, spec.n + 1))
    rng.shuffle(pi)
    return PermutationRep(pi)


def _trapezoids(rng: SplitMix64, spec: GenSpec) -> TrapezoidRep:
    span, max_len = spec.resolved_span(), spec.resolved_max_len()
    out = []
    for _ in range(spec.n):
        a = rng.below(span)
        c = rng.below(span)
        out.append((a, a + rng.between(0, max_len), c, c + rng.between(0, max_len)))
    return TrapezoidRep(out)


def _cactus(rng: SplitMix64, spec: GenSpec) -> CactusRep:
    """Glue edge and cycle blocks onto random existing vertices."""
    n = spec.n
    edges = []
    count = 1
    while count < n:
        at = rng.between(1, count)
        room = n - count
        if room < spec.cycle_min - 1 or rng.chance(spec.edge_prob):
            count += 1
            edges.append((at, count))
            continue
        k = rng.between(spec.cycle_min, min(spec.cycle_max, room + 1))
        ring = [at] + list(range(count + 1, count + k))
        count += k - 1
        edges.extend(zip(ring, ring[1:] + ring[:1]))
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return CactusRep(
        n,
        [
            (labels[u - 1], labels[v - 1], rng.between(spec.weight_min, spec.weight_max))
            for u, v in edges
        ],
    )


_BUILDERS = {
    "interval": (_intervals, interval_sssp),
    "circular-arc": (_arcs, circ_sssp),
    "permutation": (_permutation, perm_sssp),
    "trapezoid": (_trapezoids, trap_sssp),
    "cactus": (_cactus, None),
}


def generate(spec: GenSpec) -> InputDocument:
    rng = SplitMix64(spec.seed)
    build, sssp = _BUILDERS[spec.kind]
    for attempt in range(1, spec.max_retries + 1):
        rep = build(rng, spec)
        # one source suffices: connectivity is a property of the whole graph
        if not spec.connected or sssp is None or sssp(rep, 1).connected:
            if attempt > 1:
                log.info("%s n=%d seed=%d connected after %d attempts", spec.kind, spec.n, spec.seed, attempt)
            return InputDocument(spec.kind, rep)
    raise GenerationFailed(
        f"no connected {spec.kind} instance with n={spec.n} after {spec.max_retries} attempts"
    )
