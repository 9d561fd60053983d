"""Pivoting Bron-Kerbosch on adjacency lists with a reusable membership flag array."""
from __future__ import annotations

import numpy as np
from numba import njit

from ..graph import Graph
from ._emit import emit, enter
from .sink import PIVOTS, STOP, CliqueSink, EnumStats, KernelBridge

IN_P = 1
IN_X = 2
NEAR_PIVOT = 4


@njit(cache=True)
def _maxdeg_rec(indptr, indices, P, X, R, depth, flag, stats, buf, ends, flush, collect):
    # flag[] is all-zero on entry and on return
    enter(stats, depth)
    n_p = P.size
    n_x = X.size
    if n_p == 0:
        if n_x == 0:
            emit(R, depth, stats, buf, ends, flush, collect)
        return

    for i in range(n_p):
        flag[P[i]] = IN_P
    pivot = -1
    best = -1
    for j in range(n_p + n_x):
        u = P[j] if j < n_p else X[j - n_p]
        c = 0
        for t in range(indptr[u], indptr[u + 1]):
            if flag[indices[t]] == IN_P:
                c += 1
        if c > best or (c == best and u < pivot):
            best = c
            pivot = u
    stats[PIVOTS] += 1

    for t in range(indptr[pivot], indptr[pivot + 1]):
        flag[indices[t]] |= NEAR_PIVOT
    cand = np.empty(n_p, np.int64)
    n_c = 0
    for i in range(n_p):
        if flag[P[i]] == IN_P:
            cand[n_c] = P[i]
            n_c += 1
    for t in range(indptr[pivot], indptr[pivot + 1]):
        flag[indices[t]] &= ~NEAR_PIVOT
    for i in range(n_p):
        flag[P[i]] = 0

    P_cur = P.copy()
    p_len = n_p
    X_cur = np.empty(n_x + n_c, np.int64)
    X_cur[:n_x] = X
    x_len = n_x
    for k in range(n_c):
        v = cand[k]
        for i in range(p_len):
            flag[P_cur[i]] = IN_P
        for i in range(x_len):
            flag[X_cur[i]] = IN_X
        lo, hi = indptr[v], indptr[v + 1]
        new_p = np.empty(min(p_len, hi - lo), np.int64)
        new_x = np.empty(min(x_len, hi - lo), np.int64)
        a = 0
        b = 0
        for t in range(lo, hi):
            w = indices[t]
            if flag[w] == IN_P:
                new_p[a] = w
                a += 1
            elif flag[w] == IN_X:
                new_x[b] = w
                b += 1
        for i in range(p_len):
            flag[P_cur[i]] = 0
        for i in range(x_len):
            flag[X_cur[i]] = 0

        R[depth] = v
        _maxdeg_rec(indptr, indices, new_p[:a], new_x[:b], R, depth + 1, flag, stats, buf, ends, flush, collect)

        for i in range(p_len):
            if P_cur[i] == v:
                P_cur[i] = P_cur[p_len - 1]
                p_len -= 1
                break
        X_cur[x_len] = v
        x_len += 1
        if stats[STOP] != 0:
            return


@njit(cache=True)
def _maxdeg_run(indptr, indices, stats, buf, ends, flush, collect):
    n = indptr.size - 1
    if n == 0:
        return
    flag = np.zeros(n, np.int8)
    R = np.empty(n + 1, np.int64)
    P = np.arange(n, dtype=np.int64)
    X = np.empty(0, np.int64)
    _maxdeg_rec(indptr, indices, P, X, R, np.int64(0), flag, stats, buf, ends, flush, collect)


def enumerate_maxdegree(g: Graph, sink: CliqueSink) -> EnumStats:
    """List every maximal clique with pivots computed from full adjacency lists.

    Pivot counts and child sets are found by walking neighbor lists and testing
    a per-run flag array, so each call costs ``O(Delta * (|P| + |X|))``.
    """
    bridge = KernelBridge(g.n, sink)
    _maxdeg_run(g.indptr, g.indices, bridge.stats, bridge.buf, bridge.ends, bridge.flush, bridge.collect)
    return bridge.finish()
