"""Count maximal cliques of Moon-Moser graphs with every variant and time them.

    python scripts/moon_moser_table.py --k 10 15 16 17 --table mm.csv
"""
import argparse
import sys
import time

from sparseclique import generators
from sparseclique.cli import warm_up
from sparseclique.enumeration import ALGORITHMS, CliqueSink, run_algorithm
from sparseclique.graph import degeneracy_ordering
from sparseclique.io import BenchRow, open_text, write_bench_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[10, 15])
    ap.add_argument("--algorithms", nargs="+", default=list(ALGORITHMS), choices=ALGORITHMS)
    ap.add_argument("--table", default="-")
    args = ap.parse_args(argv)
    warm_up()
    rows = []
    for k in args.k:
        g = generators.moon_moser(k)
        d = degeneracy_ordering(g).d
        for name in args.algorithms:
            sink = CliqueSink.counter()
            t0 = time.perf_counter()
            run_algorithm(g, name, sink)
            seconds = time.perf_counter() - t0
            status = "ok" if sink.count == 3**k else "MISMATCH"
            print(f"MM-{g.n} {name}: mu={sink.count} seconds={seconds:.3f} {status}", file=sys.stderr)
            rows.append(BenchRow(f"M-M-{g.n}", g.n, g.m, d, sink.count, name, seconds))
    with open_text(args.table, "w") as out:
        write_bench_table(rows, out)


if __name__ == "__main__":
    main()
