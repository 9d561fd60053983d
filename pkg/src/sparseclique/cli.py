"""Command-line entry point: ``sparseclique {run,gen,validate,bench}``.

Exit codes: 0 success, 1 diagnostic or validation failure, 2 usage error.

Reported seconds cover only the enumeration pipeline of each algorithm: the
degeneracy ordering for hybrid/degen and the adjacency matrix for tomita are
inside the timer; parsing, graph construction and JIT warm-up are not.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from . import generators
from .enumeration import ALGORITHMS, CliqueSink, run_algorithm
from .graph import DEFAULT_MATRIX_CAP, CapExceeded, Graph, degeneracy_ordering, validate_ordering
from .io import (
    BenchRow,
    MalformedLine,
    MissingHeader,
    open_text,
    read_graph,
    write_bench_table,
    write_cliques,
    write_edge_list,
)
from .oracle import DuplicateClique, canonicalize, is_clique, is_maximal, plain_bron_kerbosch, subset_cliques

SUBSET_ORACLE_MAX_N = 20
BK_ORACLE_MAX_N = 64
GEN_FAMILIES = ("moon-moser", "gnp", "gnm", "grid", "complete", "path", "cycle", "star", "empty")


class UsageError(Exception):
    pass


def warm_up() -> None:
    """Load or compile every kernel so that timings exclude JIT work."""
    g = generators.moon_moser(2)
    for algorithm in ALGORITHMS:
        run_algorithm(g, algorithm, CliqueSink.counter())
        run_algorithm(g, algorithm, CliqueSink.collector())


def _load(path: str, fmt: str) -> Graph:
    try:
        return read_graph(path, fmt)
    except (MalformedLine, MissingHeader, ValueError, OSError) as exc:
        raise RuntimeError(f"cannot read {path}: {exc}") from exc


def cmd_run(args: argparse.Namespace) -> int:
    if args.count_only and args.output:
        raise UsageError("--output needs collected cliques; drop --count-only")
    g = _load(args.input, args.format)
    d = degeneracy_ordering(g).d
    warm_up()
    sink = CliqueSink.counter() if args.count_only else CliqueSink.collector()
    t0 = time.perf_counter()
    try:
        stats = run_algorithm(g, args.algorithm, sink, matrix_cap=args.matrix_cap)
    except CapExceeded as exc:
        print(f"error: {exc}; use maxdegree, hybrid or degen", file=sys.stderr)
        return 1
    seconds = time.perf_counter() - t0
    print(
        f"graph={args.input} algorithm={args.algorithm} n={g.n} m={g.m} d={d} "
        f"mu={sink.count} seconds={seconds:.6f} calls={stats.recursive_calls}"
    )
    if args.output:
        with open_text(args.output, "w") as out:
            write_cliques(sink.cliques, out, g.vertex_labels)
    return 0


def _generate(family: str, params: Sequence[str]) -> Graph:
    try:
        if family == "moon-moser":
            (k,) = params
            return generators.moon_moser(int(k))
        if family == "gnp":
            n, p, seed = params
            return generators.gnp(int(n), float(p), int(seed))
        if family == "gnm":
            n, m, seed = params
            return generators.gnm(int(n), int(m), int(seed))
        if family == "grid":
            rows, cols, seed = params
            return generators.road_grid(int(rows), int(cols), int(seed))
        (n,) = params
        return generators.named_small(family, int(n))
    except generators.UnknownFamily:
        raise UsageError(f"unknown graph family {family!r}; known: {', '.join(GEN_FAMILIES)}") from None
    except ValueError as exc:
        raise UsageError(f"bad parameters for {family}: {' '.join(params)} ({exc})") from None


def cmd_gen(args: argparse.Namespace) -> int:
    g = _generate(args.family, args.params)
    with open_text(args.output, "w") as out:
        write_edge_list(g, out)
    return 0


def _check(report: list[str], ok: bool, what: str) -> bool:
    report.append(f"{'PASS' if ok else 'FAIL'} {what}")
    return ok


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        g = _load(args.input, args.format)
    except RuntimeError as exc:
        print(f"FAIL {exc}")
        return 1
    report: list[str] = []
    failures: list[str] = []

    ordering = degeneracy_ordering(g)
    if not _check(report, validate_ordering(g, ordering), f"degeneracy ordering valid, d={ordering.d}"):
        failures.append("degeneracy ordering invalid")

    results: dict[str, list[tuple[int, ...]]] = {}
    for algorithm in ALGORITHMS:
        sink = CliqueSink.collector()
        try:
            stats = run_algorithm(g, algorithm, sink, matrix_cap=args.matrix_cap)
        except CapExceeded:
            report.append(f"SKIP {algorithm}: adjacency matrix cap exceeded")
            continue
        try:
            results[algorithm] = canonicalize(sink.cliques)
        except DuplicateClique as exc:
            _check(report, False, f"{algorithm}: {exc}")
            failures.append(f"{algorithm} reported a duplicate clique")
            continue
        sound = all(is_clique(g, c) and is_maximal(g, c) for c in results[algorithm])
        if not _check(report, sound, f"{algorithm}: {sink.count} cliques, all maximal cliques"):
            failures.append(f"{algorithm} reported a non-maximal or non-clique set")
        if algorithm in ("hybrid", "degen"):
            bounded = stats.max_top_level_p <= ordering.d and stats.max_depth <= ordering.d + 2
            if not _check(report, bounded, f"{algorithm}: top-level |P| <= d and depth <= d + 2"):
                failures.append(f"{algorithm} broke the degeneracy bound")

    oracles: dict[str, list[tuple[int, ...]]] = {}
    if g.n <= SUBSET_ORACLE_MAX_N:
        oracles["subset oracle"] = subset_cliques(g)
    if g.n <= BK_ORACLE_MAX_N:
        oracles["bk oracle"] = plain_bron_kerbosch(g)[0]

    everything = {**results, **oracles}
    names = list(everything)
    if names:
        ref_name = names[0]
        ref = everything[ref_name]
        for name in names[1:]:
            if everything[name] != ref:
                missing = sorted(set(ref) - set(everything[name]))[:3]
                extra = sorted(set(everything[name]) - set(ref))[:3]
                _check(report, False, f"{name} differs from {ref_name} (missing {missing}, extra {extra})")
                failures.append(f"{name} differs from {ref_name}")
    for line in report:
        print(line)
    if failures:
        print(f"FAILED: {failures[0]}")
        return 1
    mu = len(next(iter(everything.values()))) if everything else 0
    summary = f"{len(results)} variants"
    if oracles:
        summary += " + oracle"
    print(f"{summary} agree: mu={mu}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise UsageError(f"unknown algorithms: {', '.join(unknown)}")
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    warm_up()
    rows: list[BenchRow] = []
    for path in args.inputs:
        g = _load(path, args.format)
        d = degeneracy_ordering(g).d
        name = Path(path).stem if path != "-" else "stdin"
        for algorithm in algorithms:
            best: float | None = None
            mu: int | None = None
            for _ in range(args.repeat):
                sink = CliqueSink.counter()
                t0 = time.perf_counter()
                try:
                    run_algorithm(g, algorithm, sink, matrix_cap=args.matrix_cap)
                except CapExceeded:
                    best, mu = None, None
                    break
                elapsed = time.perf_counter() - t0
                best = elapsed if best is None else min(best, elapsed)
                mu = sink.count
            rows.append(BenchRow(name, g.n, g.m, d, mu, algorithm, best))
            shown = "NA" if best is None else f"{best:.4f}"
            print(f"{name} {algorithm} n={g.n} m={g.m} d={d} mu={'NA' if mu is None else mu} seconds={shown}")
    with open_text(args.table, "w") as out:
        write_bench_table(rows, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparseclique", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("edges", "dimacs"), default="edges")
        p.add_argument("--matrix-cap", type=int, default=DEFAULT_MATRIX_CAP,
                       help="largest n for which tomita builds its adjacency matrix")

    p = sub.add_parser("run", help="enumerate maximal cliques of one graph")
    p.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", help="write cliques here, one per line")
    graph_input(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("gen", help="write a generated graph as an edge list",
                       description="families: moon-moser K | gnp N P SEED | gnm N M SEED | "
                                   "grid ROWS COLS SEED | complete N | path N | cycle N | star N | empty N")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="cross-check every variant (and the oracle on small graphs)")
    p.add_argument("--input", required=True)
    graph_input(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", help="best-of-K timings as a CSV table")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--algorithms", default=",".join(ALGORITHMS))
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--table", required=True)
    graph_input(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
