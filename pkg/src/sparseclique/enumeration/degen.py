"""Linear-space degeneracy algorithm: one shared X|P arena plus reorderable pivot arrays.

Layout of the arena during a call with window ``[xb, pe)``::

    ... | X: arena[xb:pb] | P: arena[pb:pe] | R ...

``index_of`` is the inverse of ``arena`` for every vertex of the current
top-level subproblem, so membership in P or X is a range test. For each vertex
``u`` of the subproblem, ``pool[start[u]:start[u] + full_len[u]]`` lists ``u``'s
neighbors in the top-level P. The first ``num_in_p[u]`` entries are exactly the
neighbors in the current P at the moment the call was entered, and stay a superset
of it afterwards. Moving a vertex from P to X never touches these arrays; stale
entries are filtered by the range test.

Space accounting counts integer slots: the fixed arrays (arena, index_of,
start, full_len, num_in_p, mark: ``6n``; R: ``d + 1``), the pool (``2m``), and per-call
scratch of ``2|X| + 3|P|`` slots. A vertex belongs to the windows of at most
``deg(w)`` calls on any recursion path, so scratch peaks below ``6m`` and the
total stays under ``AUX_SLOT_FACTOR * (n + m)``.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from ..graph import DegeneracyOrder, Graph, degeneracy_ordering
from ._emit import alloc, emit, enter, free
from .sink import MAX_TOP_P, PEAK, PIVOTS, STOP, TOP_CALLS, CliqueSink, EnumStats, KernelBridge

AUX_SLOT_FACTOR = 10


@njit(cache=True)
def _swap(arena, index_of, i, j):
    a = arena[i]
    b = arena[j]
    arena[i] = b
    arena[j] = a
    index_of[b] = i
    index_of[a] = j


@njit(cache=True)
def _adjacent(indptr, indices, u, w):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        if indices[mid] < w:
            lo = mid + 1
        else:
            hi = mid
    return lo < indptr[u + 1] and indices[lo] == w


@njit(cache=True)
def _check_prefixes(indptr, indices, arena, index_of, start, num_in_p, pool, xb, pb, pe):
    # debug: every prefix holds exactly the window vertex's neighbors in P
    for j in range(xb, pe):
        u = arena[j]
        naive = 0
        for i in range(pb, pe):
            if _adjacent(indptr, indices, u, arena[i]):
                naive += 1
        if naive != num_in_p[u]:
            raise AssertionError("pivot array prefix length differs from |N(u) & P|")
        s = start[u]
        for t in range(num_in_p[u]):
            iw = index_of[pool[s + t]]
            if iw < pb or iw >= pe:
                raise AssertionError("pivot array prefix holds a vertex outside P")


@njit(cache=True)
def _degen_rec(
    arena, index_of, start, num_in_p, pool, mark, R, depth, xb, pb, pe,
    stats, buf, ends, flush, collect, debug, indptr, indices, top_end,
):
    enter(stats, depth)
    if pb == pe:
        if xb == pb:
            emit(R, depth, stats, buf, ends, flush, collect)
        return

    if debug:
        _check_prefixes(indptr, indices, arena, index_of, start, num_in_p, pool, xb, pb, pe)

    pivot = -1
    best = -1
    for j in range(xb, pe):
        u = arena[j]
        c = num_in_p[u]
        if c > best or (c == best and u < pivot):
            best = c
            pivot = u
    stats[PIVOTS] += 1

    n_p = pe - pb
    n_x = pb - xb
    width = pe - xb
    slots = 2 * n_x + 3 * n_p
    scratch = np.empty(slots, np.int64)
    alloc(stats, slots)
    cand = scratch[:n_p]
    snapshot = scratch[n_p : n_p + width]
    saved = scratch[n_p + width :]
    snapshot[:] = arena[xb:pe]

    s = start[pivot]
    for t in range(num_in_p[pivot]):
        mark[pool[s + t]] = 1
    n_c = 0
    for j in range(pb, pe):
        w = arena[j]
        if mark[w] == 0:
            cand[n_c] = w
            n_c += 1
    for t in range(num_in_p[pivot]):
        mark[pool[s + t]] = 0

    for k in range(n_c):
        v = cand[k]
        # v leaves P for R: it sits just past the shrunken P window
        _swap(arena, index_of, index_of[v], pe - 1)
        pe -= 1
        R[depth] = v

        kp = 0
        s = start[v]
        for t in range(num_in_p[v]):
            iw = index_of[pool[s + t]]
            if iw >= pb and iw < pe:
                _swap(arena, index_of, iw, pb + kp)
                kp += 1
        kx = 0
        j = pb - 1
        while j >= xb:
            x = arena[j]
            sx = start[x]
            hit = False
            for t in range(num_in_p[x]):
                if pool[sx + t] == v:
                    hit = True
                    break
            if hit:
                _swap(arena, index_of, j, pb - 1 - kx)
                kx += 1
            j -= 1
        cxb = pb - kx
        cpe = pb + kp

        if kp > 0:
            for j in range(cxb, cpe):
                u = arena[j]
                saved[j - cxb] = num_in_p[u]
                su = start[u]
                keep = 0
                for t in range(num_in_p[u]):
                    w = pool[su + t]
                    iw = index_of[w]
                    if iw >= pb and iw < cpe:
                        pool[su + t] = pool[su + keep]
                        pool[su + keep] = w
                        keep += 1
                num_in_p[u] = keep

        if debug:
            shadow = arena[:top_end].copy()
            _degen_rec(
                arena, index_of, start, num_in_p, pool, mark, R, depth + 1, cxb, pb, cpe,
                stats, buf, ends, flush, collect, debug, indptr, indices, top_end,
            )
            for j in range(top_end):
                if arena[j] != shadow[j] or index_of[arena[j]] != j:
                    raise AssertionError("arena not restored after recursive call")
        else:
            _degen_rec(
                arena, index_of, start, num_in_p, pool, mark, R, depth + 1, cxb, pb, cpe,
                stats, buf, ends, flush, collect, debug, indptr, indices, top_end,
            )

        if kp > 0:
            for j in range(cxb, cpe):
                num_in_p[arena[j]] = saved[j - cxb]

        # v joins X at the dividing line
        _swap(arena, index_of, pe, pb)
        pb += 1
        pe += 1
        if stats[STOP] != 0:
            break

    # undo: moved vertices return to P and the window regains its exact layout
    for j in range(width):
        w = snapshot[j]
        arena[xb + j] = w
        index_of[w] = xb + j
    free(stats, slots)


@njit(cache=True)
def _degen_run(indptr, indices, order, lptr, lidx, eptr, eidx, stats, buf, ends, flush, collect, debug):
    n = order.size
    arena = np.empty(n, np.int64)
    index_of = np.full(n, -1, np.int64)
    start = np.zeros(n, np.int64)
    full_len = np.zeros(n, np.int64)
    num_in_p = np.zeros(n, np.int64)
    mark = np.zeros(n, np.int8)
    pool = np.empty(max(indices.size, 1), np.int64)
    d = 0
    for v in range(n):
        if lptr[v + 1] - lptr[v] > d:
            d = lptr[v + 1] - lptr[v]
    R = np.empty(d + 1, np.int64)
    alloc(stats, 6 * n + pool.size + R.size)

    for i in range(n):
        v = order[i]
        k = 0
        for t in range(eptr[v], eptr[v + 1]):
            x = eidx[t]
            arena[k] = x
            index_of[x] = k
            k += 1
        pb = k
        for t in range(lptr[v], lptr[v + 1]):
            w = lidx[t]
            arena[k] = w
            index_of[w] = k
            k += 1
        pe = k

        # count then fill N(u) & P for every window vertex, walking later lists only
        for j in range(pe):
            full_len[arena[j]] = 0
        for j in range(pe):
            u = arena[j]
            u_in_p = j >= pb
            for t in range(lptr[u], lptr[u + 1]):
                w = lidx[t]
                iw = index_of[w]
                if iw >= pb and iw < pe:
                    full_len[u] += 1
                    if u_in_p:
                        full_len[w] += 1
        pos = 0
        for j in range(pe):
            u = arena[j]
            start[u] = pos
            pos += full_len[u]
            num_in_p[u] = 0
        for j in range(pe):
            u = arena[j]
            u_in_p = j >= pb
            for t in range(lptr[u], lptr[u + 1]):
                w = lidx[t]
                iw = index_of[w]
                if iw >= pb and iw < pe:
                    pool[start[u] + num_in_p[u]] = w
                    num_in_p[u] += 1
                    if u_in_p:
                        pool[start[w] + num_in_p[w]] = u
                        num_in_p[w] += 1

        stats[TOP_CALLS] += 1
        if pe - pb > stats[MAX_TOP_P]:
            stats[MAX_TOP_P] = pe - pb
        R[0] = v
        _degen_rec(
            arena, index_of, start, num_in_p, pool, mark, R, np.int64(1), np.int64(0), pb, pe,
            stats, buf, ends, flush, collect, debug, indptr, indices, pe,
        )
        for j in range(pe):
            index_of[arena[j]] = -1
        if stats[STOP] != 0:
            return


def enumerate_degen(
    g: Graph,
    sink: CliqueSink,
    ordering: DegeneracyOrder | None = None,
    debug: bool = False,
) -> EnumStats:
    """List every maximal clique in ``O(n + m)`` auxiliary space.

    With ``debug=True`` every call re-verifies the pivot-array prefixes naively and
    every recursive call is checked to restore the arena exactly; violations raise
    ``AssertionError``. ``stats.aux_slots`` reports the peak integer slots used.
    """
    if ordering is None:
        ordering = degeneracy_ordering(g)
    bridge = KernelBridge(g.n, sink)
    # debug is a runtime argument so both modes share one compiled kernel
    _degen_run(
        g.indptr, g.indices, ordering.order, ordering.later_indptr, ordering.later_indices,
        ordering.earlier_indptr, ordering.earlier_indices,
        bridge.stats, bridge.buf, bridge.ends, bridge.flush, bridge.collect, bool(debug),
    )
    peak = int(bridge.stats[PEAK])
    stats = bridge.finish()
    stats.aux_slots = peak
    return stats
