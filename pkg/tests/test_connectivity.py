"""Connectivity functions and their bounded-level scenarios."""

import pytest

from widthgames import (
    Graph,
    GroundSet,
    LimitExceededError,
    Matroid,
    Partition,
    carving_fn,
    check_connectivity_axioms,
    cut_rank_fn,
    delta_fn,
    is_unit_or_empty,
    lambda_fn,
    max_on_singletons,
    part_f_scenario,
    q_f_scenario,
)

K3 = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])
P4 = Graph.path("abcd")


def test_axioms_hold_for_every_builder():
    fns = [
        delta_fn(K3),
        delta_fn(P4),
        cut_rank_fn(K3),
        carving_fn(K3),
        lambda_fn(Matroid.graphic(P4)),
    ]
    for f in fns:
        report = check_connectivity_axioms(f)
        assert report.ok, f.name
        assert f.value_mask(0) == 0
        assert f.value_mask(f.ground.full_mask) == 0


def test_names_and_grounds():
    assert delta_fn(K3).name == "delta"
    assert delta_fn(K3).ground == K3.edge_ground
    assert cut_rank_fn(K3).name == "cutrank"
    assert cut_rank_fn(K3).ground == K3.vertices
    assert carving_fn(K3).name == "carving"
    assert lambda_fn(Matroid.graphic(K3)).name == "lambda"


def test_axiom_check_is_size_limited():
    g = GroundSet("abcdefg")
    f = lambda_fn(Matroid(g, lambda mask: 0))
    with pytest.raises(LimitExceededError):
        check_connectivity_axioms(f)


def test_axiom_check_catches_asymmetry():
    g = GroundSet("ab")
    from widthgames import ConnectivityFn

    f = ConnectivityFn(g, lambda m: m & 1, "skew")
    report = check_connectivity_axioms(f)
    assert not report.symmetric
    assert any(tag == "symmetry" for tag, *_ in report.witnesses)


def test_max_on_singletons():
    assert max_on_singletons(delta_fn(P4)) == 2
    assert max_on_singletons(carving_fn(K3)) == 2
    assert max_on_singletons(cut_rank_fn(K3)) == 1


def test_part_scenario_membership():
    f = delta_fn(P4)
    scenario = part_f_scenario(f, 3)
    g = f.ground
    assert scenario.kind_tag == "part_delta^3"
    assert scenario.contains_partition(Partition.indiscrete(g))
    first = g.mask_of(["a|b"])
    split = Partition(g, [first, g.full_mask & ~first])
    assert f.value_mask(first) == 1 and f.value_mask(g.full_mask & ~first) == 1
    assert scenario.contains_partition(split)
    assert not part_f_scenario(f, 1).contains_partition(split)


def test_q_scenario_membership():
    f = carving_fn(K3)
    scenario = q_f_scenario(f, 2)
    g = f.ground
    assert scenario.kind_tag == "q_carving^2"
    assert scenario.contains_partition(Partition.indiscrete(g))
    one = Partition(g, [0b001, 0b110])
    assert scenario.contains_partition(one)
    assert not scenario.contains_partition(Partition.discrete(g))
    assert not q_f_scenario(f, 1).contains_partition(one)


def test_unit_or_empty_capture_family():
    g = GroundSet("abc")
    from widthgames import Subset

    assert is_unit_or_empty(Subset(g, 0))
    assert is_unit_or_empty(Subset(g, 0b010))
    assert not is_unit_or_empty(Subset(g, 0b011))
