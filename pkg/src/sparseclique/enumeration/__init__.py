"""Four Bron-Kerbosch variants sharing the :class:`CliqueSink` reporting contract."""
from __future__ import annotations

from ..graph import DEFAULT_MATRIX_CAP, Graph, to_bit_matrix
from .degen import AUX_SLOT_FACTOR, enumerate_degen
from .hybrid import enumerate_hybrid
from .maxdegree import enumerate_maxdegree
from .pivot import choose_pivot
from .sink import CliqueSink, EnumStats
from .tomita import enumerate_tomita

ALGORITHMS = ("tomita", "maxdegree", "hybrid", "degen")


def run_algorithm(
    g: Graph,
    algorithm: str,
    sink: CliqueSink,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> EnumStats:
    """Run one variant end to end, including its own preprocessing.

    ``tomita`` builds the adjacency matrix (raising ``CapExceeded`` above
    ``matrix_cap``); ``hybrid`` and ``degen`` compute the degeneracy ordering.
    """
    if algorithm == "tomita":
        return enumerate_tomita(to_bit_matrix(g, matrix_cap), sink)
    if algorithm == "maxdegree":
        return enumerate_maxdegree(g, sink)
    if algorithm == "hybrid":
        return enumerate_hybrid(g, sink)
    if algorithm == "degen":
        return enumerate_degen(g, sink)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def maximal_cliques(g: Graph, algorithm: str = "degen") -> list[tuple[int, ...]]:
    """All maximal cliques as ascending id tuples, in the variant's report order."""
    sink = CliqueSink.collector()
    run_algorithm(g, algorithm, sink)
    return sink.cliques


def count_cliques(g: Graph, algorithm: str = "degen") -> int:
    sink = CliqueSink.counter()
    run_algorithm(g, algorithm, sink)
    return sink.count


__all__ = [
    "ALGORITHMS",
    "AUX_SLOT_FACTOR",
    "CliqueSink",
    "EnumStats",
    "choose_pivot",
    "count_cliques",
    "enumerate_degen",
    "enumerate_hybrid",
    "enumerate_maxdegree",
    "enumerate_tomita",
    "maximal_cliques",
    "run_algorithm",
]
