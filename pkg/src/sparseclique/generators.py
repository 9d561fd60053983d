"""Deterministic synthetic graph families.

Random families draw from NumPy's ``PCG64`` bit generator and consume its raw
64-bit output directly (``random_raw``), so a given ``(params, seed)`` produces
the same graph on every platform and NumPy release. A raw word ``r`` becomes
the uniform ``(r >> 11) * 2**-53`` in ``[0, 1)``.
"""
from __future__ import annotations

import numpy as np

from .graph import Graph

_CHUNK = 1 << 22


class UnknownFamily(ValueError):
    pass


def _uniforms(bitgen: np.random.PCG64, size: int) -> np.ndarray:
    raw = bitgen.random_raw(size)
    return (raw >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def moon_moser(k: int) -> Graph:
    """Complete k-partite graph with parts ``{3i, 3i+1, 3i+2}``; it has ``3**k`` maximal cliques."""
    if k < 1:
        raise ValueError("moon_moser needs k >= 1")
    n = 3 * k
    u, v = np.triu_indices(n, 1)
    keep = (u // 3) != (v // 3)
    return Graph.from_edge_array(u[keep], v[keep], n)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Pairs ``(i, j)`` with ``i < j`` are visited in lexicographic order and each
    consumes one uniform; the pair is an edge iff the uniform is below ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    bitgen = np.random.PCG64(seed)
    total = n * (n - 1) // 2
    rows = np.arange(n, dtype=np.int64)
    row_start = rows * (2 * n - rows - 1) // 2
    hits = []
    for k0 in range(0, total, _CHUNK):
        size = min(_CHUNK, total - k0)
        hits.append(np.flatnonzero(_uniforms(bitgen, size) < p) + k0)
    flat = np.concatenate(hits) if hits else np.empty(0, np.int64)
    u = np.searchsorted(row_start, flat, side="right") - 1
    v = flat - row_start[u] + u + 1
    return Graph.from_edge_array(u, v, n)


def gnm(n: int, m: int, seed: int) -> Graph:
    """Sparse random graph from ``m`` uniform vertex pairs (self-loops and repeats dropped).

    Each pair takes two raw words; endpoint ``floor(u * n)``. The edge count is
    at most ``m`` and close to it when ``m`` is far below ``n**2 / 2``.
    """
    if m < 0 or (n < 1 and m > 0):
        raise ValueError("gnm needs m >= 0 and n >= 1 when m > 0")
    bitgen = np.random.PCG64(seed)
    a = np.minimum((_uniforms(bitgen, 2 * m) * n).astype(np.int64), n - 1).reshape(m, 2)
    return Graph.from_edge_array(a[:, 0], a[:, 1], n)


def road_grid(rows: int, cols: int, seed: int, keep: float = 0.72, diagonal: float = 0.05) -> Graph:
    """Road-network stand-in: a rows x cols grid with thinned streets and a few diagonals.

    Each horizontal then vertical grid edge survives with probability ``keep``;
    each down-right diagonal is added with probability ``diagonal``, which makes
    small triangles like real road graphs while keeping the degeneracy tiny.
    """
    bitgen = np.random.PCG64(seed)
    ids = np.arange(rows * cols, dtype=np.int64).reshape(rows, cols)
    parts = [
        (ids[:, :-1].ravel(), ids[:, 1:].ravel(), keep),
        (ids[:-1, :].ravel(), ids[1:, :].ravel(), keep),
        (ids[:-1, :-1].ravel(), ids[1:, 1:].ravel(), diagonal),
    ]
    src, dst = [], []
    for a, b, prob in parts:
        hit = _uniforms(bitgen, a.size) < prob
        src.append(a[hit])
        dst.append(b[hit])
    return Graph.from_edge_array(np.concatenate(src), np.concatenate(dst), rows * cols)


def complete(n: int) -> Graph:
    u, v = np.triu_indices(n, 1)
    return Graph.from_edge_array(u, v, n)


def path(n: int) -> Graph:
    a = np.arange(max(n - 1, 0), dtype=np.int64)
    return Graph.from_edge_array(a, a + 1, n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    a = np.arange(n, dtype=np.int64)
    return Graph.from_edge_array(a, (a + 1) % n, n)


def star(n: int) -> Graph:
    """Center 0 joined to ``n - 1`` leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    leaves = np.arange(1, n, dtype=np.int64)
    return Graph.from_edge_array(np.zeros_like(leaves), leaves, n)


def empty(n: int) -> Graph:
    return Graph.from_edge_array(np.empty(0, np.int64), np.empty(0, np.int64), n)


FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "empty": empty,
}


def named_small(name: str, n: int) -> Graph:
    try:
        family = FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown graph family {name!r}; known: {', '.join(FAMILIES)}") from None
    return family(n)
