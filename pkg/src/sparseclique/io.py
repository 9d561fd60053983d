"""Edge-list and DIMACS parsing, clique and benchmark-table writers.

Edge lists: one ``u v`` integer pair per line; lines starting with ``#`` or
``%`` are comments. The comment ``# vertices N`` declares the vertex count, in
which case labels are taken as ids ``0..N-1`` and unused ids become isolated
vertices. Every path argument accepts ``"-"`` for stdin/stdout.
"""
from __future__ import annotations

import csv
import re
import sys
import warnings
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Hashable, Iterable, Iterator, Sequence

from .graph import Graph, build_graph

BENCH_COLUMNS = ("graph", "n", "m", "d", "mu", "algorithm", "seconds")
NA = "NA"

_VERTICES_DIRECTIVE = re.compile(r"^#\s*vertices\s*[:=]?\s*(\d+)\s*$")


class MalformedLine(ValueError):
    def __init__(self, line_no: int, text: str = ""):
        super().__init__(f"line {line_no}: cannot parse {text.strip()!r}")
        self.line_no = line_no


class MissingHeader(ValueError):
    pass


class EdgeCountMismatch(UserWarning):
    pass


@dataclass
class EdgeList:
    edges: list[tuple[int, int]] = field(default_factory=list)
    num_vertices: int | None = None
    declared_edges: int | None = None

    def to_graph(self) -> Graph:
        return build_graph(self.edges, self.num_vertices)


def parse_edge_list(text: str) -> EdgeList:
    result = EdgeList()
    for line_no, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s:
            continue
        if s[0] in "#%":
            hit = _VERTICES_DIRECTIVE.match(s)
            if hit:
                result.num_vertices = int(hit.group(1))
            continue
        parts = s.split()
        if len(parts) != 2:
            raise MalformedLine(line_no, line)
        try:
            result.edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedLine(line_no, line) from None
    return result


def parse_dimacs(text: str) -> EdgeList:
    """``p edge N M`` header, ``e u v`` edges with 1-based ids, ``c`` comments."""
    result = EdgeList()
    for line_no, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if len(parts) != 4:
                    raise MalformedLine(line_no, line)
                result.num_vertices = int(parts[2])
                result.declared_edges = int(parts[3])
            elif tag == "e":
                if result.num_vertices is None:
                    raise MissingHeader(f"line {line_no}: edge before 'p edge' header")
                if len(parts) != 3:
                    raise MalformedLine(line_no, line)
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
                if not (0 <= u < result.num_vertices and 0 <= v < result.num_vertices):
                    raise MalformedLine(line_no, line)
                result.edges.append((u, v))
            else:
                raise MalformedLine(line_no, line)
        except ValueError as exc:
            if isinstance(exc, (MalformedLine, MissingHeader)):
                raise
            raise MalformedLine(line_no, line) from None
    if result.num_vertices is None:
        raise MissingHeader("no 'p edge' header")
    if result.declared_edges is not None and result.declared_edges != len(result.edges):
        warnings.warn(
            f"header declares {result.declared_edges} edges, found {len(result.edges)}",
            EdgeCountMismatch,
            stacklevel=2,
        )
    return result


PARSERS = {"edges": parse_edge_list, "dimacs": parse_dimacs}


@contextmanager
def open_text(path: str | Path, mode: str = "r") -> Iterator[IO[str]]:
    if str(path) == "-":
        yield sys.stdin if "r" in mode else sys.stdout
        return
    with open(path, mode, newline="" if "w" in mode else None) as fh:
        yield fh


def read_graph(path: str | Path, fmt: str = "edges") -> Graph:
    try:
        parser = PARSERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose edges or dimacs") from None
    with open_text(path) as fh:
        return parser(fh.read()).to_graph()


def write_edge_list(g: Graph, out: IO[str]) -> None:
    """Edge list with a ``# vertices`` line; ids are written so isolated vertices survive."""
    out.write(f"# vertices {g.n}\n")
    out.write(f"# edges {g.m}\n")
    out.writelines(f"{u} {v}\n" for u, v in g.edge_array().tolist())


def write_cliques(
    cliques: Iterable[Sequence[int]],
    out: IO[str],
    labels: Sequence[Hashable] | None = None,
) -> None:
    """One clique per line, space separated, ascending by external label."""
    for c in cliques:
        names = sorted(c) if labels is None else sorted(labels[v] for v in c)
        out.write(" ".join(str(x) for x in names) + "\n")


@dataclass
class BenchRow:
    graph: str
    n: int
    m: int
    d: int
    mu: int | None
    algorithm: str
    seconds: float | None

    def as_csv(self) -> list[str]:
        return [
            self.graph, str(self.n), str(self.m), str(self.d),
            NA if self.mu is None else str(self.mu),
            self.algorithm,
            NA if self.seconds is None else f"{self.seconds:.6f}",
        ]


def write_bench_table(rows: Iterable[BenchRow], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())


def read_bench_table(fh: IO[str]) -> list[dict[str, str]]:
    return list(csv.DictReader(fh))
