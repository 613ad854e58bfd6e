"""Matroid ranks, connectivity and partition width."""

import pytest

from widthgames import (
    Graph,
    GroundSet,
    LimitExceededError,
    Matroid,
    ParseError,
    Partition,
    Subset,
    check_rank_axioms,
    matroid_lambda,
    partition_width_matroid,
)

K3 = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])


def test_graphic_and_gf2_ranks_agree():
    a = Matroid.graphic(K3)
    b = Matroid.cycle_gf2(K3)
    assert a.ground == b.ground
    for mask in range(a.ground.full_mask + 1):
        assert a.rank_mask(mask) == b.rank_mask(mask)
    assert a.full_rank == 2


def test_rank_axioms_hold_on_small_matroids():
    for m in (
        Matroid.graphic(K3),
        Matroid.cycle_gf2(Graph.path("abcd")),
        Matroid.from_matrix([[1, 0, 1, 1], [0, 1, 1, 1]], "wxyz"),
    ):
        report = check_rank_axioms(m)
        assert report.ok
        assert report.witnesses == ()


def test_rank_axiom_check_is_size_limited():
    g = GroundSet("abcdefg")
    free = Matroid(g, lambda mask: bin(mask).count("1"))
    with pytest.raises(LimitExceededError):
        check_rank_axioms(free)


def test_rank_axiom_check_catches_non_matroids():
    g = GroundSet("ab")
    bad = Matroid(g, lambda mask: 0 if mask != 3 else 2)
    report = check_rank_axioms(bad)
    assert not report.ok
    assert not report.unit_increase


def test_from_matrix_validation():
    with pytest.raises(ParseError):
        Matroid.from_matrix([])
    with pytest.raises(ParseError):
        Matroid.from_matrix([[1, 0], [1]])
    with pytest.raises(ParseError):
        Matroid.from_matrix([[2, 0]])
    with pytest.raises(ParseError):
        Matroid.from_matrix([[1, 0]], element_names=["x"])
    m = Matroid.from_matrix([[1, 0], [0, 1]])
    assert m.ground.names == ("e0", "e1")
    assert m.full_rank == 2


def test_lambda_on_triangle_edges():
    m = Matroid.graphic(K3)
    eg = m.ground
    one = eg.mask_of(["a|b"])
    assert matroid_lambda(m, one) == 1
    assert matroid_lambda(m, Subset(eg, one)) == 1
    assert matroid_lambda(m, 0) == 0
    assert matroid_lambda(m, eg.full_mask) == 0


def test_partition_width_values():
    m = Matroid.graphic(K3)
    eg = m.ground
    assert partition_width_matroid(m, Partition.indiscrete(eg)) == 0
    assert partition_width_matroid(m, Partition.discrete(eg)) == 2
    halves = Partition(eg, [0b001, 0b110])
    assert partition_width_matroid(m, halves) == 1
    with pytest.raises(ValueError):
        partition_width_matroid(m, Partition.indiscrete(GroundSet("ab")))


def test_width_identity_against_block_connectivities():
    m = Matroid.from_matrix(
        [[1, 0, 0, 1, 1], [0, 1, 0, 1, 1], [0, 0, 1, 0, 1]], "vwxyz"
    )
    g = m.ground
    for p in (
        Partition.discrete(g),
        Partition(g, [0b00011, 0b11100]),
        Partition(g, [0b00001, 0b00110, 0b11000]),
    ):
        left = partition_width_matroid(m, p)
        right = m.full_rank - sum(
            m.rank_mask(b) - matroid_lambda(m, b) for b in p.blocks
        )
        assert left == right
