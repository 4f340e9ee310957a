"""Exact Wiener index for cactus, interval, circular-arc, permutation and
trapezoid graphs, computed from their geometric models without building
edge lists, with a brute-force explicit-graph oracle alongside."""

from .cactus import BlockCutTree, CactusRep, cactus_sssp, cactus_wiener, validate_cactus
from .circular_arc import ArcRep, arc_edge, circ_sssp, circ_wiener
from .core import (
    UNREACHABLE,
    DistanceRow,
    ExplicitGraph,
    WienerValue,
    WorkCounter,
    WorkSummary,
    bfs_sssp,
    dijkstra_sssp,
    oracle_wiener,
    wiener_from_rows,
)
from .errors import (
    BadWeight,
    DisconnectedGraph,
    GenerationFailed,
    InvalidInput,
    InvalidVertex,
    NotCactus,
    NotConnected,
    ParseError,
    WienerOverflow,
    WigError,
)
from .formats import InputDocument, parse_document, serialize_document
from .generate import GenSpec, generate
from .interval import IntervalRep, interval_edge, interval_sssp, interval_wiener
from .permutation import PermutationRep, perm_edge, perm_sssp, perm_wiener
from .runner import RunReport, run_bench, run_compute
from .trapezoid import TrapezoidRep, from_interval, from_permutation, trap_edge, trap_sssp, trap_wiener

__version__ = "0.1.0"
