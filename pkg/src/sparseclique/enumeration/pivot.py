"""Reference pivot rule shared by every variant's compiled kernel."""
from __future__ import annotations

from typing import Callable, Iterable


def choose_pivot(P: Iterable[int], X: Iterable[int], adjacent: Callable[[int, int], bool]) -> int:
    """Return the ``u`` in ``P | X`` with the most neighbors in ``P``; ties go to the smallest id."""
    P = list(P)
    pool = P + list(X)
    if not pool:
        raise ValueError("P | X must be nonempty")
    best_u, best = -1, -1
    for u in pool:
        c = sum(1 for w in P if w != u and adjacent(u, w))
        if c > best or (c == best and u < best_u):
            best_u, best = u, c
    return best_u
