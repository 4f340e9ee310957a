"""Doubling sweep over every graph class, one CSV row per (class, n, algo).

    python3 scripts/bench_sweep.py --n-start 256 --n-end 2048 --out sweep.csv

Besides the raw rows it prints visits/n per class, which should stay flat
as n doubles if the per-source work is linear.
"""

import argparse
import sys
from dataclasses import dataclass, field

from wig.formats import KINDS
from wig.runner import run_bench, write_csv


@dataclass
class SweepConfig:
    n_start: int = 256
    n_end: int = 2048
    seed: int = 0
    oracle_cutoff: int = 512
    kinds: tuple = field(default_factory=lambda: KINDS)
    out: str = "-"


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-start", type=int, default=SweepConfig.n_start)
    p.add_argument("--n-end", type=int, default=SweepConfig.n_end)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--oracle-cutoff", type=int, default=SweepConfig.oracle_cutoff)
    p.add_argument("--class", dest="kinds", action="append", choices=KINDS)
    p.add_argument("--out", default="-")
    a = p.parse_args(argv)
    cfg = SweepConfig(a.n_start, a.n_end, a.seed, a.oracle_cutoff, tuple(a.kinds or KINDS), a.out)

    rows = []
    for kind in cfg.kinds:
        rows += run_bench(kind, cfg.n_start, cfg.n_end, seed=cfg.seed, oracle_cutoff=cfg.oracle_cutoff)

    if cfg.out == "-":
        write_csv(rows, sys.stdout)
    else:
        with open(cfg.out, "w", newline="") as fh:
            write_csv(rows, fh)

    print("\nmax visits per source / n", file=sys.stderr)
    for kind in cfg.kinds:
        ratios = [f"{int(r.vertex_visits) / r.n:.2f}" for r in rows
                  if r.kind == kind and r.algo == "specialized" and r.vertex_visits]
        print(f"  {kind:13s} {' '.join(ratios)}", file=sys.stderr)
    mismatched = [
        (s.kind, s.n) for s in rows for o in rows
        if s.algo == "specialized" and o.algo == "oracle" and (s.kind, s.n) == (o.kind, o.n)
        and o.wiener != "skipped" and o.wiener != s.wiener
    ]
    if mismatched:
        print(f"oracle disagreement at {mismatched}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
