"""Ground sets, subsets and the partition lattice."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from widthgames.errors import GroundMismatchError, LimitExceededError, ParseError
from widthgames.ground import GroundSet, Subset
from widthgames.partitions import (
    Partition,
    enumerate_partitions,
    is_coarser,
    triple_partitions,
)

ABC = GroundSet("abc")
ABCD = GroundSet("abcd")

BELL = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}


def test_ground_set_names_and_bits():
    g = GroundSet(["x", "y", "z"])
    assert g.names == ("x", "y", "z")
    assert g.bit("y") == 1
    assert g.mask_of(["x", "z"]) == 0b101
    assert g.names_of(0b101) == ("x", "z")
    with pytest.raises(KeyError):
        g.bit("w")


def test_ground_set_rejects_duplicates():
    with pytest.raises(ValueError):
        GroundSet("aa")


def test_subset_algebra():
    s = Subset(ABC, 0b011)
    t = Subset(ABC, 0b110)
    assert (s & t).mask == 0b010
    assert (s | t).mask == 0b111
    assert (s - t).mask == 0b001
    assert s.complement().mask == 0b100
    assert "a" in s and "c" not in s
    assert len(s) == 2


def test_subset_parse():
    assert Subset.parse(ABC, "a, c").mask == 0b101
    assert Subset.parse(ABC, "").mask == 0
    with pytest.raises(ParseError):
        Subset.parse(ABC, "a,q")


def test_partition_canonicalizes():
    p = Partition(ABC, [0b100, 0b011])
    assert p.blocks == (0b011, 0b100)
    assert str(p) == "{a,b}{c}"


def test_partition_rejects_bad_blocks():
    with pytest.raises(ValueError):
        Partition(ABC, [0b011, 0b110])
    with pytest.raises(ValueError):
        Partition(ABC, [0b001])


def test_partition_parse_round_trip():
    p = Partition.parse(ABCD, "{a,b}{c}{d}")
    assert p.blocks == (0b0011, 0b0100, 0b1000)
    assert Partition.parse(ABCD, str(p)) == p
    with pytest.raises(ParseError):
        Partition.parse(ABCD, "{a,b}c{d}")
    with pytest.raises(ParseError):
        Partition.parse(ABCD, "{a}{b}")


def test_block_of_and_subsets():
    p = Partition.parse(ABCD, "{a,c}{b,d}")
    assert p.block_of("c").mask == 0b0101
    assert [s.mask for s in p.subsets()] == [0b0101, 0b1010]


def test_coarsening_order():
    one = Partition.indiscrete(ABC)
    disc = Partition.discrete(ABC)
    mid = Partition.parse(ABC, "{a,b}{c}")
    assert one.is_coarser_than(disc)
    assert one.is_coarser_than(mid)
    assert mid.is_coarser_than(disc)
    assert not disc.is_coarser_than(mid)
    assert is_coarser(one, mid) and not is_coarser(mid, one)


def test_join_of_crossing_bipartitions():
    p = Partition.parse(ABCD, "{a,b}{c,d}")
    q = Partition.parse(ABCD, "{a,c}{b,d}")
    assert p.join(q) == Partition.indiscrete(ABCD)
    r = Partition.parse(ABCD, "{a}{b}{c,d}")
    assert p.join(r) == p


def test_redirect():
    p = Partition.parse(ABCD, "{a,b}{c,d}")
    moved = p.redirect(Subset(ABCD, 0b0011), Subset(ABCD, 0b0100))
    assert moved == Partition.parse(ABCD, "{a,b,c}{d}")
    with pytest.raises(ValueError):
        p.redirect(Subset(ABCD, 0b0110), Subset(ABCD, 0b0001))


def test_ground_mismatch_raises():
    with pytest.raises(GroundMismatchError):
        Partition.indiscrete(ABC).join(Partition.indiscrete(ABCD))


@pytest.mark.parametrize("n,count", sorted(BELL.items()))
def test_partition_counts(n, count):
    ground = GroundSet("abcde"[:n])
    parts = list(enumerate_partitions(ground))
    assert len(parts) == count
    assert len(set(parts)) == count


def test_enumerate_partitions_limit():
    with pytest.raises(LimitExceededError):
        list(enumerate_partitions(GroundSet("abcdefghijkl")))


def test_bipartition_count():
    # 2^(n-1) splits of a nonempty ground, one-block partition included
    bips = [p for p in enumerate_partitions(ABCD) if len(p.blocks) <= 2]
    assert len(bips) == 8


def test_triple_partitions_shape():
    bips = [p for p in enumerate_partitions(ABC) if len(p.blocks) <= 2]
    triples = list(triple_partitions(bips))
    assert all(len(t.blocks) <= 3 for t in triples)
    assert Partition.indiscrete(ABC) in triples
    # three-way splits need all three side splits available
    assert Partition.discrete(ABC) in triples


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=4, max_size=4),
       st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_join_upper_bound_property(a1, a2):
    def build(assignment):
        groups = {}
        for elem, g in enumerate(assignment):
            groups.setdefault(g, 0)
            groups[g] |= 1 << elem
        return Partition(ABCD, groups.values())

    p, q = build(a1), build(a2)
    j = p.join(q)
    assert j.is_coarser_than(p)
    assert j.is_coarser_than(q)
    for r in enumerate_partitions(ABCD):
        if r.is_coarser_than(p) and r.is_coarser_than(q):
            assert r.is_coarser_than(j)
