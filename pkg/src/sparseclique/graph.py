"""Immutable CSR graphs, degeneracy orderings and packed adjacency matrices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np
from numba import njit

DEFAULT_MATRIX_CAP = 50_000


class CapExceeded(Exception):
    """The graph is too large for an adjacency matrix; use a list-based variant."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"adjacency matrix cap exceeded: n={n} > cap={cap}")
        self.n = n
        self.cap = cap


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in compressed adjacency-list form.

    ``indices[indptr[v]:indptr[v + 1]]`` holds the neighbors of ``v`` in strictly
    ascending order. Vertex ids are dense ``0..n-1``; ``vertex_labels[v]`` is the
    external label of ``v`` (``None`` means labels equal ids).
    """

    indptr: np.ndarray
    indices: np.ndarray
    vertex_labels: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    @property
    def adjacency(self) -> list[np.ndarray]:
        return [self.neighbors(v) for v in range(self.n)]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def label(self, v: int) -> Hashable:
        return v if self.vertex_labels is None else self.vertex_labels[v]

    def edge_array(self) -> np.ndarray:
        """Each undirected edge once as an ``(m, 2)`` array of ids with ``u < v``."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        keep = src < self.indices
        return np.column_stack((src[keep], self.indices[keep]))

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edge_array()]

    def labeled_edges(self) -> Iterator[tuple[Hashable, Hashable]]:
        for u, v in self.edge_array():
            yield self.label(int(u)), self.label(int(v))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_edge_array(
        cls,
        src: np.ndarray,
        dst: np.ndarray,
        n: int,
        vertex_labels: tuple | None = None,
    ) -> "Graph":
        """Build from parallel id arrays; drops self-loops and duplicate edges."""
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        if src.size and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n):
            raise ValueError(f"vertex id out of range for n={n}")
        keep = src != dst
        lo = np.minimum(src[keep], dst[keep])
        hi = np.maximum(src[keep], dst[keep])
        key = np.unique(lo * n + hi)
        lo, hi = key // max(n, 1), key % max(n, 1)
        rows = np.concatenate((lo, hi))
        cols = np.concatenate((hi, lo))
        perm = np.lexsort((cols, rows))
        indices = cols[perm]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        return cls(_frozen(indptr), _frozen(indices), vertex_labels)


def build_graph(
    edges: Iterable[tuple[Hashable, Hashable]],
    num_vertices: int | None = None,
) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Without ``num_vertices`` labels are remapped to ids in first-appearance order
    (a self-loop still introduces its label as an isolated vertex). With
    ``num_vertices`` every label must be an integer in ``[0, num_vertices)`` and is
    used as the id directly, so vertices absent from ``edges`` become isolated.
    """
    if num_vertices is not None:
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        arr = arr.reshape(-1, 2)
        return Graph.from_edge_array(arr[:, 0], arr[:, 1], int(num_vertices))

    ids: dict[Hashable, int] = {}
    src: list[int] = []
    dst: list[int] = []
    for a, b in edges:
        ia = ids.setdefault(a, len(ids))
        ib = ids.setdefault(b, len(ids))
        src.append(ia)
        dst.append(ib)
    labels = tuple(ids)
    if all(type(lab) is int for lab in labels) and labels == tuple(range(len(labels))):
        labels = None
    return Graph.from_edge_array(np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64), len(ids), labels)


@dataclass(frozen=True, eq=False)
class DegeneracyOrder:
    """A vertex ordering with each vertex's neighbors split by relative position.

    ``order[i]`` is the i-th vertex removed by peeling and ``position`` is its
    inverse. ``later(v)`` / ``earlier(v)`` are ascending-id neighbor lists.
    """

    order: np.ndarray
    position: np.ndarray
    d: int
    later_indptr: np.ndarray
    later_indices: np.ndarray
    earlier_indptr: np.ndarray
    earlier_indices: np.ndarray

    @property
    def n(self) -> int:
        return len(self.order)

    def later(self, v: int) -> np.ndarray:
        return self.later_indices[self.later_indptr[v] : self.later_indptr[v + 1]]

    def earlier(self, v: int) -> np.ndarray:
        return self.earlier_indices[self.earlier_indptr[v] : self.earlier_indptr[v + 1]]

    @property
    def later_neighbors(self) -> list[np.ndarray]:
        return [self.later(v) for v in range(self.n)]

    @property
    def earlier_neighbors(self) -> list[np.ndarray]:
        return [self.earlier(v) for v in range(self.n)]

    def replace_d(self, d: int) -> "DegeneracyOrder":
        return DegeneracyOrder(
            self.order, self.position, d, self.later_indptr, self.later_indices,
            self.earlier_indptr, self.earlier_indices,
        )

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int], d: int | None = None) -> "DegeneracyOrder":
        """Split ``g``'s neighborhoods against an arbitrary ``order``.

        ``d`` defaults to the largest later-neighbor count.
        """
        order = np.asarray(order, dtype=np.int64)
        position = np.empty(g.n, dtype=np.int64)
        position[order] = np.arange(g.n, dtype=np.int64)
        src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees())
        is_later = position[g.indices] > position[src]
        later_indptr = np.zeros(g.n + 1, dtype=np.int64)
        earlier_indptr = np.zeros(g.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src[is_later], minlength=g.n), out=later_indptr[1:])
        np.cumsum(np.bincount(src[~is_later], minlength=g.n), out=earlier_indptr[1:])
        if d is None:
            d = int(np.diff(later_indptr).max()) if g.n else 0
        return cls(
            _frozen(order), _frozen(position), int(d),
            _frozen(later_indptr), _frozen(g.indices[is_later].copy()),
            _frozen(earlier_indptr), _frozen(g.indices[~is_later].copy()),
        )


@njit(cache=True)
def _peel_smallest_id(indptr, indices):
    # indexed binary min-heap keyed on (remaining degree, vertex id)
    n = indptr.size - 1
    deg = np.empty(n, np.int64)
    heap = np.empty(n, np.int64)
    where = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        heap[v] = v
        where[v] = v
    size = n
    # heapify
    for start in range(n // 2 - 1, -1, -1):
        i = start
        while True:
            c = 2 * i + 1
            if c >= size:
                break
            if c + 1 < size:
                a, b = heap[c], heap[c + 1]
                if deg[b] < deg[a] or (deg[b] == deg[a] and b < a):
                    c += 1
            x, y = heap[i], heap[c]
            if deg[y] < deg[x] or (deg[y] == deg[x] and y < x):
                heap[i], heap[c] = y, x
                where[y], where[x] = i, c
                i = c
            else:
                break
    removed = np.zeros(n, np.bool_)
    order = np.empty(n, np.int64)
    d = 0
    for k in range(n):
        v = heap[0]
        order[k] = v
        removed[v] = True
        if deg[v] > d:
            d = deg[v]
        size -= 1
        if size > 0:
            last = heap[size]
            heap[0] = last
            where[last] = 0
            i = 0
            while True:
                c = 2 * i + 1
                if c >= size:
                    break
                if c + 1 < size:
                    a, b = heap[c], heap[c + 1]
                    if deg[b] < deg[a] or (deg[b] == deg[a] and b < a):
                        c += 1
                x, y = heap[i], heap[c]
                if deg[y] < deg[x] or (deg[y] == deg[x] and y < x):
                    heap[i], heap[c] = y, x
                    where[y], where[x] = i, c
                    i = c
                else:
                    break
        for t in range(indptr[v], indptr[v + 1]):
            w = indices[t]
            if removed[w]:
                continue
            deg[w] -= 1
            i = where[w]
            while i > 0:
                p = (i - 1) // 2
                x = heap[p]
                if deg[w] < deg[x] or (deg[w] == deg[x] and w < x):
                    heap[i] = x
                    where[x] = i
                    i = p
                else:
                    break
            heap[i] = w
            where[w] = i
    return order, d


@njit(cache=True)
def _peel_buckets(indptr, indices):
    # Batagelj-Zaversnik bin sort with constant-time decrement
    n = indptr.size - 1
    deg = np.empty(n, np.int64)
    maxdeg = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] > maxdeg:
            maxdeg = deg[v]
    bin_start = np.zeros(maxdeg + 2, np.int64)
    for v in range(n):
        bin_start[deg[v] + 1] += 1
    for k in range(1, maxdeg + 2):
        bin_start[k] += bin_start[k - 1]
    fill = bin_start.copy()
    vert = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    for v in range(n):
        pos[v] = fill[deg[v]]
        vert[pos[v]] = v
        fill[deg[v]] += 1
    d = 0
    for i in range(n):
        v = vert[i]
        if deg[v] > d:
            d = deg[v]
        for t in range(indptr[v], indptr[v + 1]):
            u = indices[t]
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bin_start[du]
                w = vert[pw]
                if u != w:
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                    pos[u] = pw
                bin_start[du] += 1
                deg[u] -= 1
    return vert, d


def degeneracy_ordering(g: Graph, method: str = "smallest-id") -> DegeneracyOrder:
    """Peel minimum-remaining-degree vertices; ``d`` is the largest degree seen at removal.

    ``method="smallest-id"`` breaks ties by the smallest vertex id (canonical,
    O((n+m) log n)). ``method="bucket"`` is the linear-time bin-sort peel whose
    tie-breaking follows bucket position; it yields the same ``d``.
    """
    if method == "smallest-id":
        order, d = _peel_smallest_id(g.indptr, g.indices)
    elif method == "bucket":
        order, d = _peel_buckets(g.indptr, g.indices)
    else:
        raise ValueError(f"unknown peeling method {method!r}")
    return DegeneracyOrder.from_order(g, order, int(d))


def validate_ordering(g: Graph, ordering: DegeneracyOrder) -> bool:
    """True iff ``ordering`` is a consistent degeneracy ordering of ``g`` with value ``d``."""
    n = g.n
    if ordering.n != n or len(ordering.position) != n:
        return False
    order = np.asarray(ordering.order)
    pos = np.asarray(ordering.position)
    if n == 0:
        return ordering.d == 0
    if not np.array_equal(np.sort(order), np.arange(n)):
        return False
    if not np.array_equal(pos[order], np.arange(n)):
        return False
    later_counts = np.diff(ordering.later_indptr)
    earlier_counts = np.diff(ordering.earlier_indptr)
    if len(later_counts) != n or len(earlier_counts) != n:
        return False
    if not np.array_equal(later_counts + earlier_counts, g.degrees()):
        return False
    if later_counts.max() != ordering.d:
        return False
    for v in range(n):
        later, earlier = ordering.later(v), ordering.earlier(v)
        if np.any(pos[later] <= pos[v]) or np.any(pos[earlier] >= pos[v]):
            return False
        if not np.array_equal(np.sort(np.concatenate((later, earlier))), g.neighbors(v)):
            return False
    return True


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """Packed symmetric adjacency matrix; row ``v`` is ``words`` little-endian uint64 words."""

    n: int
    rows: np.ndarray

    @property
    def words(self) -> int:
        return self.rows.shape[1]

    def bit(self, v: int, w: int) -> bool:
        return bool((int(self.rows[v, w >> 6]) >> (w & 63)) & 1)

    def row_set(self, v: int) -> set[int]:
        return {w for w in range(self.n) if self.bit(v, w)}


def to_bit_matrix(g: Graph, cap: int = DEFAULT_MATRIX_CAP) -> BitMatrix:
    if g.n > cap:
        raise CapExceeded(g.n, cap)
    words = max(1, (g.n + 63) // 64)
    flat = np.zeros(g.n * words, dtype=np.uint64)
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees())
    dst = g.indices
    np.bitwise_or.at(flat, src * words + (dst >> 6), np.left_shift(np.uint64(1), (dst & 63).astype(np.uint64)))
    return BitMatrix(g.n, _frozen(flat.reshape(g.n, words)))
