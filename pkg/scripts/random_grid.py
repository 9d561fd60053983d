"""Dense G(n, p) grid: degeneracy and clique counts of our seeded instances.

The grid below lists (n, p) cells with a reference degeneracy. Our instances use
different random draws, so only d is compared (as a band); mu is printed for
information and is expected to differ.
"""
import argparse
import time

from sparseclique import generators
from sparseclique.cli import warm_up
from sparseclique.enumeration import CliqueSink, run_algorithm
from sparseclique.graph import degeneracy_ordering

GRID = {
    (100, 0.6): 51, (100, 0.7): 59, (100, 0.8): 70,
    (300, 0.1): 21, (300, 0.2): 47, (300, 0.3): 74, (300, 0.4): 101,
    (500, 0.1): 39, (500, 0.2): 81, (500, 0.3): 127,
    (700, 0.1): 56, (700, 0.2): 117,
    (1000, 0.1): 82, (1000, 0.2): 172,
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--algorithm", default="degen")
    ap.add_argument("--skip-mu", action="store_true", help="only compute degeneracy")
    args = ap.parse_args(argv)
    warm_up()
    print("n,p,d,reference_d,mu,seconds")
    for (n, p), ref in GRID.items():
        g = generators.gnp(n, p, args.seed)
        d = degeneracy_ordering(g).d
        mu, seconds = "", ""
        if not args.skip_mu:
            sink = CliqueSink.counter()
            t0 = time.perf_counter()
            run_algorithm(g, args.algorithm, sink)
            mu, seconds = sink.count, f"{time.perf_counter() - t0:.3f}"
        print(f"{n},{p},{d},{ref},{mu},{seconds}")


if __name__ == "__main__":
    main()
