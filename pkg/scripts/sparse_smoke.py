"""Large sparse runs of the degen variant: time, clique count and peak auxiliary space."""
import argparse
import time

from sparseclique import generators
from sparseclique.cli import warm_up
from sparseclique.enumeration import AUX_SLOT_FACTOR, CliqueSink, enumerate_degen


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--grid", type=int, default=1415, help="side of the road-grid analog")
    args = ap.parse_args(argv)
    warm_up()
    cases = [
        ("gnp(10000, 0.001)", lambda: generators.gnp(10_000, 0.001, args.seed)),
        ("gnm(10^6, 3*10^6)", lambda: generators.gnm(10**6, 3 * 10**6, args.seed)),
        (f"road_grid({args.grid}x{args.grid})", lambda: generators.road_grid(args.grid, args.grid, args.seed)),
    ]
    for name, make in cases:
        g = make()
        t0 = time.perf_counter()
        stats = enumerate_degen(g, CliqueSink.counter())
        seconds = time.perf_counter() - t0
        ratio = stats.aux_slots / (g.n + g.m)
        print(f"{name}: n={g.n} m={g.m} mu={stats.cliques} seconds={seconds:.2f} "
              f"aux/(n+m)={ratio:.2f} (bound {AUX_SLOT_FACTOR}) max_depth={stats.max_depth}")


if __name__ == "__main__":
    main()
