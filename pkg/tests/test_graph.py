import numpy as np
import pytest

from sparseclique import generators as gen
from sparseclique.graph import (
    CapExceeded,
    DegeneracyOrder,
    Graph,
    build_graph,
    degeneracy_ordering,
    to_bit_matrix,
    validate_ordering,
)


def test_build_drops_loops_and_duplicates():
    g = build_graph([(0, 1), (1, 0), (1, 1), (1, 2), (0, 1)], num_vertices=4)
    assert g.n == 4
    assert g.m == 2
    assert g.edge_list() == [(0, 1), (1, 2)]
    assert g.neighbors(3).size == 0


def test_build_remaps_labels_in_first_seen_order():
    g = build_graph([(10, 7), (7, 42)])
    assert g.n == 3
    assert [g.label(v) for v in range(3)] == [10, 7, 42]
    assert sorted(g.labeled_edges()) == sorted([(10, 7), (7, 42)])


def test_identity_labels_are_dropped():
    g = build_graph([(0, 1), (1, 2)])
    assert g.vertex_labels is None


def test_self_loop_only_vertex_is_kept():
    g = build_graph([(5, 5), (1, 2)])
    assert g.n == 3
    assert g.m == 1


def test_out_of_range_ids_rejected():
    with pytest.raises(ValueError):
        build_graph([(0, 5)], num_vertices=3)


def test_csr_is_sorted_symmetric_and_read_only():
    g = gen.gnp(40, 0.3, 1)
    for v in range(g.n):
        nb = g.neighbors(v)
        assert np.all(np.diff(nb) > 0)
        for w in nb:
            assert g.has_edge(int(w), v)
    assert g.degrees().sum() == 2 * g.m
    with pytest.raises(ValueError):
        g.indices[0] = 0


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_complete_degeneracy(n):
    assert degeneracy_ordering(gen.complete(n)).d == n - 1


def test_small_family_degeneracy():
    assert degeneracy_ordering(gen.path(10)).d == 1
    assert degeneracy_ordering(gen.star(9)).d == 1
    assert degeneracy_ordering(gen.cycle(7)).d == 2
    assert degeneracy_ordering(gen.empty(5)).d == 0
    assert degeneracy_ordering(gen.empty(0)).d == 0


def test_smallest_id_tie_break():
    # every vertex of a cycle has degree 2, so peeling starts at 0 and always takes the smallest id
    ordering = degeneracy_ordering(gen.cycle(6))
    assert ordering.order.tolist() == [0, 1, 2, 3, 4, 5]
    ordering = degeneracy_ordering(gen.star(5))
    # once three leaves are gone the center has degree 1 and wins the tie against leaf 4
    assert ordering.order.tolist() == [1, 2, 3, 0, 4]


@pytest.mark.parametrize("seed", range(8))
def test_bucket_method_matches_d(seed):
    g = gen.gnp(60, 0.15, seed)
    a = degeneracy_ordering(g)
    b = degeneracy_ordering(g, method="bucket")
    assert a.d == b.d
    assert validate_ordering(g, a) and validate_ordering(g, b)


def test_unknown_method():
    with pytest.raises(ValueError):
        degeneracy_ordering(gen.path(3), method="random")


def test_later_and_earlier_split_adjacency():
    g = gen.gnp(30, 0.25, 3)
    o = degeneracy_ordering(g)
    for v in range(g.n):
        later, earlier = set(o.later(v).tolist()), set(o.earlier(v).tolist())
        assert later | earlier == set(g.neighbors(v).tolist())
        assert not later & earlier
        assert all(o.position[w] > o.position[v] for w in later)
        assert len(later) <= o.d


def test_validate_ordering_rejects_bad_orders():
    g = gen.cycle(5)
    good = degeneracy_ordering(g)
    assert validate_ordering(g, good)
    assert not validate_ordering(g, good.replace_d(1))
    # reversed order of a cycle still has at most 2 later neighbours per vertex
    assert validate_ordering(g, DegeneracyOrder.from_order(g, [4, 3, 2, 1, 0]))
    star = gen.star(5)
    center_first = DegeneracyOrder.from_order(star, [0, 1, 2, 3, 4], d=1)
    assert not validate_ordering(star, center_first)


def test_bit_matrix_rows():
    g = gen.gnp(70, 0.2, 9)
    bm = to_bit_matrix(g)
    for v in range(g.n):
        assert bm.row_set(v) == set(g.neighbors(v).tolist())
    assert not bm.bit(0, 0)


def test_bit_matrix_cap():
    with pytest.raises(CapExceeded, match="adjacency matrix cap exceeded"):
        to_bit_matrix(gen.path(10), cap=9)


def test_graph_repr_mentions_size():
    assert "n=3" in repr(gen.path(3))
    assert isinstance(gen.path(3), Graph)
