"""Pivoting Bron-Kerbosch over a packed adjacency matrix."""
from __future__ import annotations

import numpy as np
from numba import njit

from ..graph import BitMatrix
from ._emit import emit, enter
from .sink import PIVOTS, STOP, CliqueSink, EnumStats, KernelBridge


@njit(cache=True)
def _bit(rows, u, w):
    return ((rows[u, w >> 6] >> np.uint64(w & 63)) & np.uint64(1)) != 0


@njit(cache=True)
def _tomita_rec(rows, P, X, R, depth, stats, buf, ends, flush, collect):
    enter(stats, depth)
    n_p = P.size
    n_x = X.size
    if n_p == 0:
        if n_x == 0:
            emit(R, depth, stats, buf, ends, flush, collect)
        return

    pivot = -1
    best = -1
    for j in range(n_p + n_x):
        u = P[j] if j < n_p else X[j - n_p]
        c = 0
        for i in range(n_p):
            if _bit(rows, u, P[i]):
                c += 1
        if c > best or (c == best and u < pivot):
            best = c
            pivot = u
    stats[PIVOTS] += 1

    cand = np.empty(n_p, np.int64)
    n_c = 0
    for i in range(n_p):
        if not _bit(rows, pivot, P[i]):
            cand[n_c] = i
            n_c += 1

    in_p = np.ones(n_p, np.bool_)
    X_cur = np.empty(n_x + n_c, np.int64)
    X_cur[:n_x] = X
    x_len = n_x
    for k in range(n_c):
        v = P[cand[k]]
        new_p = np.empty(n_p, np.int64)
        a = 0
        for i in range(n_p):
            if in_p[i] and _bit(rows, v, P[i]):
                new_p[a] = P[i]
                a += 1
        new_x = np.empty(x_len, np.int64)
        b = 0
        for i in range(x_len):
            if _bit(rows, v, X_cur[i]):
                new_x[b] = X_cur[i]
                b += 1
        R[depth] = v
        _tomita_rec(rows, new_p[:a], new_x[:b], R, depth + 1, stats, buf, ends, flush, collect)
        in_p[cand[k]] = False
        X_cur[x_len] = v
        x_len += 1
        if stats[STOP] != 0:
            return


@njit(cache=True)
def _tomita_run(rows, n, stats, buf, ends, flush, collect):
    if n == 0:
        return
    P = np.arange(n, dtype=np.int64)
    X = np.empty(0, np.int64)
    R = np.empty(n + 1, np.int64)
    _tomita_rec(rows, P, X, R, np.int64(0), stats, buf, ends, flush, collect)


def enumerate_tomita(matrix: BitMatrix, sink: CliqueSink) -> EnumStats:
    """List every maximal clique using adjacency-matrix pivoting.

    The initial call has ``P = V`` and empty ``R`` and ``X``. Each call scans
    matrix rows to pick the pivot maximizing ``|P & N(u)|`` and branches only on
    ``P`` minus the pivot's neighbors.
    """
    bridge = KernelBridge(matrix.n, sink)
    _tomita_run(matrix.rows, matrix.n, bridge.stats, bridge.buf, bridge.ends, bridge.flush, bridge.collect)
    return bridge.finish()
