import math

import numpy as np
import pytest

from sparseclique import generators as gen
from sparseclique.graph import degeneracy_ordering


def reference_gnp_edges(n, p, seed):
    """Pair-by-pair restatement of the documented sampling rule."""
    bitgen = np.random.PCG64(seed)
    raw = bitgen.random_raw(n * (n - 1) // 2)
    out, k = [], 0
    for i in range(n):
        for j in range(i + 1, n):
            if (int(raw[k]) >> 11) * 2.0**-53 < p:
                out.append((i, j))
            k += 1
    return out


@pytest.mark.parametrize("n,p,seed", [(20, 0.3, 1), (37, 0.55, 9), (5, 1.0, 0), (6, 0.0, 4)])
def test_gnp_follows_the_documented_rule(n, p, seed):
    assert gen.gnp(n, p, seed).edge_list() == reference_gnp_edges(n, p, seed)


def test_gnp_is_deterministic():
    a, b = gen.gnp(300, 0.05, 17), gen.gnp(300, 0.05, 17)
    assert np.array_equal(a.indices, b.indices) and np.array_equal(a.indptr, b.indptr)
    assert gen.gnp(300, 0.05, 18).edge_list() != a.edge_list()


def test_gnp_edge_count_is_binomial():
    g = gen.gnp(100, 0.6, 2024)
    mean = 4950 * 0.6
    sd = math.sqrt(4950 * 0.6 * 0.4)
    assert mean == pytest.approx(2970)
    assert abs(g.m - mean) <= 5 * sd


def test_gnp_extremes():
    assert gen.gnp(8, 0.0, 1).m == 0
    assert gen.gnp(8, 1.0, 1).m == 28
    assert gen.gnp(0, 0.5, 1).n == 0
    assert gen.gnp(1, 0.5, 1).m == 0
    with pytest.raises(ValueError):
        gen.gnp(5, 1.5, 0)


@pytest.mark.parametrize("k", [1, 2, 5, 10])
def test_moon_moser_shape(k):
    g = gen.moon_moser(k)
    n = 3 * k
    assert g.n == n
    assert g.m == n * (n - 3) // 2
    assert degeneracy_ordering(g).d == n - 3
    assert not g.has_edge(0, 1) and not g.has_edge(1, 2)
    with pytest.raises(ValueError):
        gen.moon_moser(0)


def test_small_families():
    assert gen.complete(6).m == 15
    assert gen.path(6).edge_list() == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    assert gen.cycle(4).edge_list() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert gen.star(4).edge_list() == [(0, 1), (0, 2), (0, 3)]
    assert gen.empty(3).m == 0 and gen.empty(3).n == 3
    with pytest.raises(ValueError):
        gen.cycle(2)
    with pytest.raises(gen.UnknownFamily):
        gen.named_small("petersen", 10)
    assert gen.named_small("path", 3).m == 2


def test_gnm():
    g = gen.gnm(1000, 2000, 3)
    assert 1900 <= g.m <= 2000
    assert gen.gnm(1000, 2000, 3).edge_list() == g.edge_list()
    with pytest.raises(ValueError):
        gen.gnm(0, 3, 1)


def test_road_grid_is_sparse_and_low_degeneracy():
    g = gen.road_grid(60, 80, 5)
    assert g.n == 4800
    assert 1.2 * g.n < g.m < 1.7 * g.n
    assert degeneracy_ordering(g).d <= 3
    assert max(g.degrees()) <= 6
    assert gen.road_grid(60, 80, 5).edge_list() == g.edge_list()


def test_named_small_examples():
    assert gen.named_small("complete", 4).m == 6
    assert degeneracy_ordering(gen.named_small("cycle", 5)).d == 2


# reference degeneracies for dense random graphs; d concentrates tightly around its mean
DEGENERACY_BAND = {(100, 0.6): 51, (100, 0.7): 59, (300, 0.1): 21, (300, 0.3): 74, (500, 0.2): 81, (1000, 0.1): 82}


@pytest.mark.parametrize("n,p", sorted(DEGENERACY_BAND))
def test_gnp_degeneracy_within_band(n, p):
    ref = DEGENERACY_BAND[(n, p)]
    for seed in range(3):
        d = degeneracy_ordering(gen.gnp(n, p, seed)).d
        assert abs(d - ref) <= max(3, 0.05 * ref), (seed, d, ref)
