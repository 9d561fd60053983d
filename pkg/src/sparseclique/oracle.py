"""Exhaustive ground truth for small graphs.

Two unrelated mechanisms so they can check each other: a vectorized scan over
every vertex subset, and Bron-Kerbosch without pivoting on Python int bitsets.
Neither shares code with the compiled enumerators.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .graph import Graph

SUBSET_LIMIT = 32
BK_LIMIT = 200
_BLOCK = 1 << 20

Clique = tuple[int, ...]


class TooLarge(ValueError):
    pass


class DuplicateClique(ValueError):
    """The same clique was reported twice, which means an enumerator is broken."""


def canonicalize(cliques: Iterable[Iterable[int]]) -> list[Clique]:
    """Sort each clique ascending, then sort the cliques lexicographically."""
    out = sorted(tuple(sorted(int(v) for v in c)) for c in cliques)
    for a, b in zip(out, out[1:]):
        if a == b:
            raise DuplicateClique(f"clique {a} reported more than once")
    return out


def _neighbor_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << int(w)
        masks.append(m)
    return masks


def subset_cliques(g: Graph) -> list[Clique]:
    """Test every nonempty vertex subset for being a clique that no outside vertex extends."""
    n = g.n
    if n > SUBSET_LIMIT:
        raise TooLarge(f"subset enumeration supports n <= {SUBSET_LIMIT}, got {n}")
    adj = [np.uint64(m) for m in _neighbor_masks(g)]
    one = np.uint64(1)
    everything = np.uint64((1 << n) - 1)
    found: list[Clique] = []
    total = 1 << n
    for lo in range(0, total, _BLOCK):
        sub = np.arange(lo, min(total, lo + _BLOCK), dtype=np.uint64)
        ok = sub != 0
        common = np.full(sub.shape, everything, dtype=np.uint64)
        for v in range(n):
            bit = one << np.uint64(v)
            has = (sub & bit) != 0
            # every other member must be a neighbor of v
            ok &= ~has | ((sub & ~(adj[v] | bit)) == 0)
            common = np.where(has, common & adj[v], common)
        ok &= (common & ~sub) == 0
        for mask in sub[ok].tolist():
            found.append(tuple(v for v in range(n) if (mask >> v) & 1))
    return canonicalize(found)


def plain_bron_kerbosch(g: Graph) -> tuple[list[Clique], int]:
    """Bron-Kerbosch branching on every vertex of P; returns (cliques, number of calls)."""
    n = g.n
    if n > BK_LIMIT:
        raise TooLarge(f"pivot-free Bron-Kerbosch supports n <= {BK_LIMIT}, got {n}")
    adj = _neighbor_masks(g)
    found: list[int] = []
    calls = 0

    def expand(r: int, p: int, x: int) -> None:
        nonlocal calls
        calls += 1
        if not p:
            if not x:
                found.append(r)
            return
        while p:
            low = p & -p
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low

    expand(0, (1 << n) - 1, 0)
    cliques = [tuple(v for v in range(n) if (r >> v) & 1) for r in found if r]
    return canonicalize(cliques), calls


def brute_force_cliques(g: Graph, mode: str = "auto") -> list[Clique]:
    """Canonical list of all maximal cliques.

    ``mode`` is ``"subsets"`` (n <= 32), ``"bk"`` (n <= 200) or ``"auto"``,
    which runs both where both apply and insists they agree.
    """
    if mode == "subsets":
        return subset_cliques(g)
    if mode == "bk":
        return plain_bron_kerbosch(g)[0]
    if mode != "auto":
        raise ValueError(f"unknown oracle mode {mode!r}")
    bk = plain_bron_kerbosch(g)[0]
    if g.n <= 20:
        subsets = subset_cliques(g)
        if subsets != bk:
            raise AssertionError("oracle modes disagree")
    return bk


def is_clique(g: Graph, clique: Iterable[int]) -> bool:
    c = list(clique)
    return all(g.has_edge(a, b) for i, a in enumerate(c) for b in c[i + 1 :])


def is_maximal(g: Graph, clique: Iterable[int]) -> bool:
    """No vertex outside ``clique`` is adjacent to all of it (assumes ``clique`` is a clique)."""
    c = list(clique)
    if not c:
        return g.n == 0
    common = set(g.neighbors(c[0]).tolist())
    for v in c[1:]:
        common &= set(g.neighbors(v).tolist())
    return not common
