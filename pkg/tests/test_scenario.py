"""Scenario conditions and weak submodularity."""

import pytest

from widthgames.ground import GroundSet, Subset
from widthgames.partitions import Partition, enumerate_partitions
from widthgames.scenario import (
    ExplicitScenario,
    Scenario,
    check_axioms,
    check_weak_submodularity,
)

ABCD = GroundSet("abcd")


def _scenario(partition_texts, simple_texts, ground=ABCD):
    return ExplicitScenario(
        ground,
        [Partition.parse(ground, t) for t in partition_texts],
        [Subset.parse(ground, t) for t in simple_texts],
    )


def test_axioms_hold_on_everything_family():
    sc = ExplicitScenario(
        ABCD,
        list(enumerate_partitions(ABCD)),
        [Subset(ABCD, m) for m in range(16)],
    )
    report = check_axioms(sc)
    assert report.ok
    assert report.witnesses == ()


def test_coarsening_closure_violation_detected():
    sc = _scenario(["{a}{b}{c,d}"], [""])
    report = check_axioms(sc)
    assert not report.sc1
    assert report.witnesses


def test_block_condition_violation_detected():
    # {a,b} is a block of a member and inside the simple set {a,b,c},
    # but is not itself simple
    sc = _scenario(
        ["{a,b,c,d}", "{a,b}{c,d}"],
        ["a,b,c"],
    )
    report = check_axioms(sc)
    assert not report.sc2


def test_split_condition_violation_detected():
    # {a} is simple but {a}{b,c,d} is not in the family
    sc = _scenario(["{a,b,c,d}"], ["a"])
    report = check_axioms(sc)
    assert report.sc1 and report.sc2
    assert not report.sc3


def test_full_axioms_on_up_closed_family():
    parts = [p for p in enumerate_partitions(ABCD)
             if len(p.blocks) == 1
             or p == Partition.parse(ABCD, "{a}{b,c,d}")]
    sc = ExplicitScenario(ABCD, parts, [Subset.parse(ABCD, "a"),
                                        Subset.parse(ABCD, "b,c,d"),
                                        Subset.parse(ABCD, "")])
    report = check_axioms(sc)
    assert report.ok, report.witnesses


def test_weak_submodularity_of_small_family():
    sc = _scenario(
        ["{a,b,c,d}", "{a}{b,c,d}", "{a,b}{c,d}"],
        ["", "a"],
    )
    assert check_weak_submodularity(sc).holds


NON_WS_PARTITIONS = ["{a,c}{b,d}", "{a,d}{b,c}", "{a,b,c,d}"]
NON_WS_SIMPLES = ["b,c", "a,d"]


def test_weak_submodularity_failure_has_witness():
    sc = _scenario(NON_WS_PARTITIONS, NON_WS_SIMPLES)
    assert check_axioms(sc).ok
    report = check_weak_submodularity(sc)
    assert not report.holds
    p1, p2, x, y = report.witness
    assert sc.contains_partition(p1) and sc.contains_partition(p2)
    assert x.mask in p1.blocks
    assert y.mask in p2.blocks


def test_oracle_scenario_matches_explicit():
    members = {Partition.indiscrete(ABCD), Partition.parse(ABCD, "{a}{b,c,d}")}

    def in_family(p):
        return p in members

    def is_simple(s):
        return len(s) <= 1

    oracle_backed = Scenario(ABCD, in_family, is_simple, kind_tag="probe")
    explicit = oracle_backed.explicit()
    assert set(explicit.partition_members()) == members
    assert len(explicit.simple_members()) == 5
    assert explicit.kind_tag == "probe"
    assert oracle_backed.simple_union_covers_ground()


def test_contains_simple_mask():
    sc = _scenario(["{a,b,c,d}", "{a}{b,c,d}"], ["a", ""])
    assert sc.contains_simple_mask(0b0001)
    assert not sc.contains_simple_mask(0b0011)


def test_ground_mismatch_on_membership():
    sc = _scenario(["{a,b,c,d}"], [""])
    other = GroundSet("xy")
    from widthgames.errors import GroundMismatchError
    with pytest.raises(GroundMismatchError):
        sc.contains_partition(Partition.indiscrete(other))
