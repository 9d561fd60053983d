"""Sweep G(n, p) graphs: cross-check all variants against the oracle, report call counts."""
import argparse

from sparseclique import generators
from sparseclique.enumeration import ALGORITHMS, CliqueSink, run_algorithm
from sparseclique.oracle import brute_force_cliques, canonicalize, plain_bron_kerbosch


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[10, 15, 20])
    ap.add_argument("--p", type=float, nargs="+", default=[0.1, 0.3, 0.5, 0.7, 0.9])
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args(argv)
    divergences = 0
    print("n,p,seed,mu,plain_bk_calls," + ",".join(f"{a}_calls" for a in ALGORITHMS))
    for n in args.n:
        for p in args.p:
            for seed in range(args.seeds):
                g = generators.gnp(n, p, seed)
                expected = brute_force_cliques(g)
                calls = []
                for name in ALGORITHMS:
                    sink = CliqueSink.collector()
                    stats = run_algorithm(g, name, sink)
                    calls.append(stats.recursive_calls)
                    if canonicalize(sink.cliques) != expected:
                        divergences += 1
                        print(f"# DIVERGENCE {name} n={n} p={p} seed={seed}")
                plain = plain_bron_kerbosch(g)[1]
                print(f"{n},{p},{seed},{len(expected)},{plain}," + ",".join(map(str, calls)))
    print(f"# divergences: {divergences}")
    return 1 if divergences else 0


if __name__ == "__main__":
    raise SystemExit(main())
