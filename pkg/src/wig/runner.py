"""Dispatch a document to its class module, and the benchmark sweep."""

from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Callable, Optional, TextIO

from . import cactus, circular_arc, interval, permutation, trapezoid
from .core import (
    DistanceRow,
    ExplicitGraph,
    WienerValue,
    WorkSummary,
    distance_matrix,
    oracle_sssp,
    oracle_wiener,
)
from .errors import DisconnectedGraph, InvalidInput, WienerOverflow, WigError
from .formats import InputDocument
from .generate import GenSpec, generate

ALGOS = ("specialized", "oracle")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_DISCONNECTED = 3
EXIT_OVERFLOW = 4


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, InvalidInput):
        return EXIT_INVALID
    if isinstance(exc, DisconnectedGraph):
        return EXIT_DISCONNECTED
    if isinstance(exc, WienerOverflow):
        return EXIT_OVERFLOW
    return EXIT_FAILURE


@dataclass
class ClassOps:
    sssp: Callable
    wiener: Callable
    explicit: Callable[..., ExplicitGraph]


CLASSES = {
    "interval": ClassOps(interval.interval_sssp, interval.interval_wiener, interval.build_explicit),
    "circular-arc": ClassOps(circular_arc.circ_sssp, circular_arc.circ_wiener, circular_arc.build_explicit),
    "permutation": ClassOps(permutation.perm_sssp, permutation.perm_wiener, permutation.build_explicit),
    "trapezoid": ClassOps(trapezoid.trap_sssp, trapezoid.trap_wiener, trapezoid.build_explicit),
    "cactus": ClassOps(cactus.cactus_sssp, cactus.cactus_wiener, cactus.to_explicit),
}


def validate_document(doc: InputDocument) -> Optional[cactus.BlockCutTree]:
    """Semantic checks beyond parsing; returns the decomposition for cacti."""
    if doc.kind == "cactus":
        return cactus.validate_cactus(doc.rep)
    return None


@dataclass
class RunReport:
    kind: str
    n: int
    algo: str
    wiener: Optional[int] = None
    rows: Optional[list] = None
    error: Optional[str] = None
    exit_code: int = EXIT_OK
    work: WorkSummary = field(default_factory=WorkSummary)
    wall_ms: float = 0.0

    def to_json(self) -> dict:
        out = {
            "class": self.kind,
            "n": self.n,
            "algo": self.algo,
            "wall_ms": round(self.wall_ms, 3),
            "work": asdict(self.work),
        }
        if self.error is not None:
            out["error"] = self.error
            out["exit_code"] = self.exit_code
        if self.wiener is not None:
            out["wiener"] = self.wiener
        if self.rows is not None:
            out["distances"] = self.rows
        return out


def _rows(doc: InputDocument, algo: str) -> list[DistanceRow]:
    ops = CLASSES[doc.kind]
    if algo == "oracle":
        return distance_matrix(doc.n, partial(oracle_sssp, ops.explicit(doc.rep)))
    target = validate_document(doc) if doc.kind == "cactus" else doc.rep
    return distance_matrix(doc.n, partial(ops.sssp, target))


def _wiener(doc: InputDocument, algo: str, parallel: bool, work: WorkSummary) -> WienerValue:
    ops = CLASSES[doc.kind]
    if algo == "oracle":
        return oracle_wiener(ops.explicit(doc.rep), parallel=parallel, work=work)
    return ops.wiener(doc.rep, parallel=parallel, work=work)


def run_compute(
    doc: InputDocument, algo: str = "specialized", emit: str = "wiener", parallel: bool = False
) -> RunReport:
    if algo not in ALGOS:
        raise InvalidInput(f"unknown algorithm {algo!r}")
    if emit not in ("wiener", "distances"):
        raise InvalidInput(f"unknown emit mode {emit!r}")
    report = RunReport(doc.kind, doc.n, algo)
    t0 = time.perf_counter()
    try:
        validate_document(doc)
        if emit == "distances":
            report.rows = [r.dist for r in _rows(doc, algo)]
        else:
            report.wiener = _wiener(doc, algo, parallel, report.work).value
    except WigError as exc:
        report.error = str(exc)
        report.exit_code = exit_code_for(exc)
    report.wall_ms = (time.perf_counter() - t0) * 1000
    return report


def format_plain(report: RunReport) -> str:
    if report.rows is not None:
        return "".join(" ".join("-" if d is None else str(d) for d in row) + "\n" for row in report.rows)
    return f"{report.wiener}\n"


@dataclass
class BenchRow:
    kind: str
    n: int
    algo: str
    wiener: str
    vertex_visits: str
    layers: str
    wall_ms: str

    FIELDS = ("class", "n", "algo", "wiener", "vertex_visits", "layers", "wall_ms")

    def as_list(self) -> list:
        return [self.kind, self.n, self.algo, self.wiener, self.vertex_visits, self.layers, self.wall_ms]


def doubling(n_start: int, n_end: int) -> list[int]:
    if n_start < 1 or n_end < n_start:
        raise InvalidInput("need 1 <= n-start <= n-end")
    out = []
    n = n_start
    while n <= n_end:
        out.append(n)
        n *= 2
    return out


def run_bench(
    kind: str,
    n_start: int,
    n_end: int,
    *,
    seed: int = 0,
    oracle_cutoff: int = 2048,
    parallel: bool = False,
    spec_overrides: Optional[dict] = None,
) -> list[BenchRow]:
    """One specialized and one oracle row per n of a doubling sweep.

    ``vertex_visits`` is the largest per-source count and ``layers`` the
    largest BFS depth seen; the oracle row is marked skipped above the cutoff.
    """
    rows = []
    for n in doubling(n_start, n_end):
        doc = generate(GenSpec(kind, n, seed=seed, connected=True, **(spec_overrides or {})))
        for algo in ALGOS:
            if algo == "oracle" and n > oracle_cutoff:
                rows.append(BenchRow(kind, n, algo, "skipped", "", "", ""))
                continue
            rep = run_compute(doc, algo, parallel=parallel)
            if rep.error is not None:
                rows.append(BenchRow(kind, n, algo, f"error: {rep.error}", "", "", f"{rep.wall_ms:.1f}"))
                continue
            rows.append(
                BenchRow(
                    kind,
                    n,
                    algo,
                    str(rep.wiener),
                    str(rep.work.max_visits),
                    str(rep.work.max_layers),
                    f"{rep.wall_ms:.1f}",
                )
            )
    return rows


def write_csv(rows: list[BenchRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(BenchRow.FIELDS)
    for r in rows:
        w.writerow(r.as_list())
