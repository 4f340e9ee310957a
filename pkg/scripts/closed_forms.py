"""Tabulate Wiener values of paths, cycles and cliques built in each model.

The explicit-graph oracle runs up to --oracle-max; beyond that only the
specialized routine and the closed form are compared.
"""

import argparse
import sys
from dataclasses import dataclass

from wig import circular_arc, interval, permutation, trapezoid
from wig.core import oracle_wiener
from wig.interval import IntervalRep
from wig.permutation import PermutationRep


@dataclass
class Family:
    name: str
    n_min: int
    build: object
    explicit: object
    wiener: object
    formula: object


def chain(n):
    return IntervalRep([(2 * i, 2 * i + 2) for i in range(n)])


def ring(n):
    return circular_arc.ArcRep(2 * n, [(2 * i, (2 * i + 2) % (2 * n)) for i in range(n)])


FAMILIES = [
    Family("interval P_n", 2, chain, interval.build_explicit, interval.interval_wiener,
           lambda n: n * (n * n - 1) // 6),
    Family("trapezoid P_n", 2, lambda n: trapezoid.from_interval(chain(n)), trapezoid.build_explicit,
           trapezoid.trap_wiener, lambda n: n * (n * n - 1) // 6),
    Family("arc C_n", 3, ring, circular_arc.build_explicit, circular_arc.circ_wiener,
           lambda n: n**3 // 8 if n % 2 == 0 else n * (n * n - 1) // 8),
    Family("permutation K_n", 2, PermutationRep.reverse, permutation.build_explicit,
           permutation.perm_wiener, lambda n: n * (n - 1) // 2),
]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--oracle-max", type=int, default=12)
    p.add_argument("--step", type=int, default=1)
    a = p.parse_args(argv)

    bad = 0
    print(f"{'family':16s} {'n':>5s} {'formula':>10s} {'specialized':>12s} {'oracle':>8s}")
    for fam in FAMILIES:
        for n in range(fam.n_min, a.n_max + 1, a.step):
            want = fam.formula(n)
            got = fam.wiener(fam.build(n)).value
            ref = oracle_wiener(fam.explicit(fam.build(n))).value if n <= a.oracle_max else None
            ok = got == want and ref in (None, want)
            bad += not ok
            if n <= a.oracle_max or n % 50 == 0 or not ok:
                print(f"{fam.name:16s} {n:5d} {want:10d} {got:12d} {'-' if ref is None else ref:>8}"
                      + ("" if ok else "  MISMATCH"))
    print(f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
