"""Graph structure, cut functions and small-graph enumeration."""

import pytest

from widthgames import (
    Graph,
    ParseError,
    Partition,
    Subset,
    boundary,
    carving_cut,
    cut_rank,
    delta,
    enumerate_small_graphs,
    enumerate_vertex_graphs,
    graphic_rank,
)
from widthgames.oracle import count_labeled_graphs

K3 = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])
P4 = Graph.path("abcd")


def test_construction_and_accessors():
    assert K3.vertex_count == 3
    assert K3.edge_count == 3
    assert K3.edge_ground.names == ("a|b", "a|c", "b|c")
    assert K3.degree("a") == 2
    assert sorted(K3.neighbors("a")) == ["b", "c"]
    assert K3.endpoints("a|c") == ("a", "c")
    assert K3.is_connected
    assert Graph.complete("abcd").edge_count == 6
    assert Graph.cycle("abcde").edge_count == 5


def test_rejects_loops_parallel_edges_and_bad_names():
    with pytest.raises(ValueError):
        Graph("ab", [("a", "a")])
    with pytest.raises(ValueError):
        Graph("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        Graph(["a|b", "c"], [])
    with pytest.raises(ValueError):
        Graph("ab", []).edge_ground


def test_edge_list_parsing():
    g = Graph.from_edge_list("a b\nb c  # comment\n\nd\n")
    assert g.vertices.names == ("a", "b", "c", "d")
    assert g.edge_count == 2
    assert not g.is_connected
    with pytest.raises(ParseError):
        Graph.from_edge_list("a b c\n")
    with pytest.raises(ParseError):
        Graph.from_edge_list("a a\n")


def test_boundary_and_delta_on_k3():
    eg = K3.edge_ground
    single = eg.mask_of(["a|b"])
    assert delta(K3, single) == 2
    assert delta(K3, 0) == 0
    assert delta(K3, eg.full_mask) == 0
    discrete = Partition.discrete(eg)
    assert boundary(K3, discrete) == Subset(K3.vertices, K3.vertices.full_mask)
    halves = Partition(eg, [single, eg.full_mask & ~single])
    assert boundary(K3, halves).names() == ("a", "b")


def test_delta_on_path_counts_inner_endpoints():
    eg = P4.edge_ground
    first = eg.mask_of(["a|b"])
    assert delta(P4, first) == 1
    middle = eg.mask_of(["b|c"])
    assert delta(P4, middle) == 2


def test_cut_rank_and_carving_hand_values():
    one_vertex = K3.vertices.mask_of(["a"])
    assert cut_rank(K3, one_vertex) == 1
    assert carving_cut(K3, one_vertex) == 2
    assert cut_rank(K3, 0) == 0
    assert carving_cut(K3, K3.vertices.full_mask) == 0
    two = P4.vertices.mask_of(["a", "c"])
    assert carving_cut(P4, two) == 3
    assert cut_rank(P4, two) == 2


def test_graphic_rank():
    eg = K3.edge_ground
    assert graphic_rank(K3, eg.full_mask) == 2
    assert graphic_rank(K3, eg.mask_of(["a|b"])) == 1
    assert graphic_rank(K3, 0) == 0


def test_labeled_enumeration_matches_direct_count():
    graphs = list(enumerate_small_graphs(2, max_vertices=4, dedup=False))
    assert len(graphs) == count_labeled_graphs(2, 4) == 21
    assert all(1 <= g.edge_count <= 2 for g in graphs)


def test_dedup_enumeration_counts():
    assert len(list(enumerate_small_graphs(2))) == 3
    assert len(list(enumerate_small_graphs(5))) == 45
    connected = list(enumerate_small_graphs(3, connected=True))
    assert len(connected) == 5
    assert all(g.is_connected for g in connected)


def test_vertex_enumeration_counts():
    assert len(list(enumerate_vertex_graphs(1))) == 1
    assert len(list(enumerate_vertex_graphs(2))) == 2
    assert len(list(enumerate_vertex_graphs(3))) == 4
    assert len(list(enumerate_vertex_graphs(4))) == 11
    assert len(list(enumerate_vertex_graphs(5))) == 34
