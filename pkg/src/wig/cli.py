"""Command-line front end: compute, gen, validate, bench, convert.

Exit status: 0 success, 2 parse or validation error, 3 disconnected graph,
4 Wiener overflow, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import circular_arc, trapezoid
from .errors import InvalidInput, WigError
from .formats import KINDS, InputDocument, parse_document, serialize_document
from .generate import GenSpec, generate
from .runner import (
    ALGOS,
    EXIT_INVALID,
    EXIT_OK,
    exit_code_for,
    format_plain,
    run_bench,
    run_compute,
    validate_document,
    write_csv,
)

log = logging.getLogger("wig")


def _read(path: str) -> InputDocument:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_document(data)


def _write(out: Optional[str], data: bytes) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def cmd_compute(args) -> int:
    doc = _read(args.input)
    report = run_compute(doc, args.algo, args.emit, parallel=args.parallel)
    if report.error is not None:
        if args.format == "json":
            print(json.dumps(report.to_json()))
        print(f"error: {report.error}", file=sys.stderr)
        return report.exit_code
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        sys.stdout.write(format_plain(report))
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        span=args.span,
        max_len=args.max_len,
        wrap_prob=args.wrap_prob,
        cycle_min=args.cycle_min,
        cycle_max=args.cycle_max,
        edge_prob=args.edge_prob,
        weight_min=args.weight_min,
        weight_max=args.weight_max,
        connected=args.connected,
    )
    _write(args.out, serialize_document(generate(spec)))
    return EXIT_OK


def cmd_validate(args) -> int:
    doc = _read(args.input)
    bct = validate_document(doc)
    extra = ""
    if bct is not None:
        cycles = sum(1 for b in bct.blocks if hasattr(b, "order"))
        extra = f" blocks={len(bct.blocks)} cycles={cycles} cut_vertices={len(bct.cut_vertices)}"
    print(f"ok {doc.kind} n={doc.n}{extra}")
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = run_bench(
        args.kind,
        args.n_start,
        args.n_end,
        seed=args.seed,
        oracle_cutoff=args.oracle_cutoff,
        parallel=args.parallel,
    )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_convert(args) -> int:
    doc = _read(args.input)
    if args.to == "trapezoid" and doc.kind == "interval":
        out = InputDocument("trapezoid", trapezoid.from_interval(doc.rep))
    elif args.to == "trapezoid" and doc.kind == "permutation":
        out = InputDocument("trapezoid", trapezoid.from_permutation(doc.rep))
    elif args.to == "circular-arc" and doc.kind == "interval":
        out = InputDocument("circular-arc", circular_arc.from_interval(doc.rep))
    else:
        raise InvalidInput(f"no conversion from {doc.kind} to {args.to}")
    _write(args.out, serialize_document(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wig", description="Wiener index of structured graph classes")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="Wiener index or distance matrix of a document")
    c.add_argument("--input", required=True, help="document path, or - for stdin")
    c.add_argument("--algo", choices=ALGOS, default="specialized")
    c.add_argument("--emit", choices=("wiener", "distances"), default="wiener")
    c.add_argument("--format", choices=("plain", "json"), default="plain")
    c.add_argument("--parallel", action="store_true", help="run sources in a process pool")
    c.set_defaults(func=cmd_compute)

    g = sub.add_parser("gen", help="generate a seeded random document")
    g.add_argument("--class", dest="kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--span", type=int, help="endpoint range, or circumference for arcs")
    g.add_argument("--max-len", type=int)
    g.add_argument("--wrap-prob", type=float, default=0.25)
    g.add_argument("--cycle-min", type=int, default=3)
    g.add_argument("--cycle-max", type=int, default=8)
    g.add_argument("--edge-prob", type=float, default=0.5)
    g.add_argument("--weight-min", type=int, default=1)
    g.add_argument("--weight-max", type=int, default=9)
    g.add_argument("--connected", action="store_true")
    g.add_argument("--out", help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="parse and check a document")
    v.add_argument("--input", required=True)
    v.set_defaults(func=cmd_validate)

    b = sub.add_parser("bench", help="doubling sweep, one CSV row per run")
    b.add_argument("--class", dest="kind", choices=KINDS, required=True)
    b.add_argument("--n-start", type=int, required=True)
    b.add_argument("--n-end", type=int, required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--oracle-cutoff", type=int, default=2048)
    b.add_argument("--parallel", action="store_true")
    b.add_argument("--csv", help="write CSV here instead of stdout")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("convert", help="re-express a document in another model")
    v.add_argument("--input", required=True)
    v.add_argument("--to", choices=("trapezoid", "circular-arc"), required=True)
    v.add_argument("--out")
    v.set_defaults(func=cmd_convert)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except WigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
