"""Degeneracy-ordered Bron-Kerbosch that consults only later-neighbor lists."""
from __future__ import annotations

import numpy as np
from numba import njit

from ..graph import DegeneracyOrder, Graph, degeneracy_ordering
from ._emit import emit, enter
from .sink import MAX_TOP_P, PIVOTS, STOP, TOP_CALLS, CliqueSink, EnumStats, KernelBridge

IN_P = 1
IN_X = 2
MARK = 4


@njit(cache=True)
def _in_later(lptr, lidx, a, b):
    # binary search for b in the ascending later list of a
    lo = lptr[a]
    hi = lptr[a + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        if lidx[mid] < b:
            lo = mid + 1
        else:
            hi = mid
    return lo < lptr[a + 1] and lidx[lo] == b


@njit(cache=True)
def _hybrid_rec(lptr, lidx, P, X, R, depth, flag, cnt, stats, buf, ends, flush, collect):
    # every adjacency between a and b is found as b in later(a) or a in later(b)
    enter(stats, depth)
    n_p = P.size
    n_x = X.size
    if n_p == 0:
        if n_x == 0:
            emit(R, depth, stats, buf, ends, flush, collect)
        return

    for i in range(n_p):
        flag[P[i]] = IN_P
    for i in range(n_x):
        flag[X[i]] = IN_X
    for j in range(n_p + n_x):
        u = P[j] if j < n_p else X[j - n_p]
        u_in_p = flag[u] == IN_P
        for t in range(lptr[u], lptr[u + 1]):
            w = lidx[t]
            fw = flag[w]
            if fw == IN_P:
                cnt[u] += 1
            if u_in_p and fw != 0:
                cnt[w] += 1
    pivot = -1
    best = -1
    for j in range(n_p + n_x):
        u = P[j] if j < n_p else X[j - n_p]
        c = cnt[u]
        cnt[u] = 0
        if c > best or (c == best and u < pivot):
            best = c
            pivot = u
    stats[PIVOTS] += 1

    for t in range(lptr[pivot], lptr[pivot + 1]):
        w = lidx[t]
        if flag[w] == IN_P:
            flag[w] = IN_P | MARK
    cand = np.empty(n_p, np.int64)
    n_c = 0
    for i in range(n_p):
        w = P[i]
        if flag[w] == IN_P and not _in_later(lptr, lidx, w, pivot):
            cand[n_c] = w
            n_c += 1
    for i in range(n_p):
        flag[P[i]] = 0
    for i in range(n_x):
        flag[X[i]] = 0

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
        new_p = np.empty(p_len, np.int64)
        new_x = np.empty(x_len, np.int64)
        a = 0
        b = 0
        for t in range(lptr[v], lptr[v + 1]):
            w = lidx[t]
            if flag[w] == IN_P:
                new_p[a] = w
                a += 1
            elif flag[w] == IN_X:
                new_x[b] = w
                b += 1
        for i in range(p_len):
            w = P_cur[i]
            if w != v and _in_later(lptr, lidx, w, v):
                new_p[a] = w
                a += 1
            flag[w] = 0
        for i in range(x_len):
            w = X_cur[i]
            if _in_later(lptr, lidx, w, v):
                new_x[b] = w
                b += 1
            flag[w] = 0

        R[depth] = v
        _hybrid_rec(lptr, lidx, new_p[:a], new_x[:b], R, depth + 1, flag, cnt, stats, buf, ends, flush, collect)

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
def _hybrid_run(order, lptr, lidx, eptr, eidx, stats, buf, ends, flush, collect):
    n = order.size
    flag = np.zeros(n, np.int8)
    cnt = np.zeros(n, np.int64)
    R = np.empty(n + 1, np.int64)
    for i in range(n):
        v = order[i]
        P = lidx[lptr[v] : lptr[v + 1]].copy()
        X = eidx[eptr[v] : eptr[v + 1]].copy()
        stats[TOP_CALLS] += 1
        if P.size > stats[MAX_TOP_P]:
            stats[MAX_TOP_P] = P.size
        R[0] = v
        _hybrid_rec(lptr, lidx, P, X, R, np.int64(1), flag, cnt, stats, buf, ends, flush, collect)
        if stats[STOP] != 0:
            return


def enumerate_hybrid(g: Graph, sink: CliqueSink, ordering: DegeneracyOrder | None = None) -> EnumStats:
    """Outer loop over a degeneracy ordering, inner pivoting on later-neighbor lists.

    Vertex ``v`` seeds one subproblem with ``P`` its later neighbors and ``X``
    its earlier neighbors, so every top-level ``|P| <= d``.
    """
    if ordering is None:
        ordering = degeneracy_ordering(g)
    bridge = KernelBridge(g.n, sink)
    _hybrid_run(
        ordering.order, ordering.later_indptr, ordering.later_indices,
        ordering.earlier_indptr, ordering.earlier_indices,
        bridge.stats, bridge.buf, bridge.ends, bridge.flush, bridge.collect,
    )
    return bridge.finish()
