"""The reference generators and agreement suites themselves."""

import pytest

from widthgames import (
    GroundSet,
    NotWeaklySubmodularError,
    Partition,
    Subset,
    ExplicitScenario,
    LimitExceededError,
    check_axioms,
    check_weak_submodularity,
)
from widthgames.oracle import (
    EXHAUSTIVE_GROUND_LIMIT,
    _all_trees,
    all_scenarios,
    brute_force_equivalence_suite,
    cor5_suite,
    count_labeled_graphs,
    exploratory_suite,
    makeexact_suite,
    monotonicity_suite,
    sample_scenarios,
)


def _ground(n):
    return GroundSet("abcdefg"[:n])


def test_generator_counts_and_axioms():
    assert len(list(all_scenarios(_ground(1)))) == 5
    assert len(list(all_scenarios(_ground(2)))) == 15
    batch = list(all_scenarios(_ground(3)))
    assert len(batch) == 171
    for s in batch[::17]:
        assert check_axioms(s).ok


def test_generated_families_are_closed():
    for s in all_scenarios(_ground(2)):
        report = check_axioms(s)
        assert report.ok, s
        assert s.kind_tag == "generated"


def test_exhaustive_limit_guard():
    assert EXHAUSTIVE_GROUND_LIMIT == 4
    with pytest.raises(LimitExceededError):
        cor5_suite(max_n=6)


def test_sampler_is_deterministic_and_filtered():
    g = _ground(5)
    a = sample_scenarios(g, 5, seed=7)
    b = sample_scenarios(g, 5, seed=7)
    assert [s.partitions for s in a] == [s.partitions for s in b]
    assert [s.simples for s in a] == [s.simples for s in b]
    c = sample_scenarios(g, 5, seed=8)
    assert [s.partitions for s in a] != [s.partitions for s in c]
    for s in a:
        assert s.kind_tag == "sampled"
        assert s.simple_union_covers_ground()
        assert check_weak_submodularity(s).holds


NON_WS_PARTITIONS = ["{a,c}{b,d}", "{a,d}{b,c}", "{a,b,c,d}"]
NON_WS_SIMPLES = ["b,c", "a,d"]


def _non_ws_scenario():
    g = GroundSet("abcd")
    return ExplicitScenario(
        g,
        [Partition.parse(g, t) for t in NON_WS_PARTITIONS],
        [Subset.parse(g, t) for t in NON_WS_SIMPLES],
    )


def test_equivalence_suite_preconditions():
    g = GroundSet("ab")
    sparse = ExplicitScenario(
        g, [Partition.indiscrete(g)], [Subset(g, 0b01)]
    )
    with pytest.raises(ValueError):
        brute_force_equivalence_suite(sparse)
    with pytest.raises(NotWeaklySubmodularError):
        brute_force_equivalence_suite(_non_ws_scenario())


def test_small_suite_counts():
    report = cor5_suite(max_n=2)
    assert report.ok and report.instances == 8
    report = cor5_suite(max_n=3)
    assert report.ok and report.instances == 82
    assert "ok" in report.summary()


def test_monotonicity_suite_small():
    report = monotonicity_suite(max_n=2, max_edges=2)
    assert report.ok
    assert report.instances == 18


def test_makeexact_suite_small():
    report = makeexact_suite(max_n=3)
    assert report.ok
    assert report.instances == 48


def test_exploratory_suite_reports_without_failing():
    report = exploratory_suite(max_n=3)
    assert report.ok
    assert report.instances == 0
    assert report.notes


def test_equivalence_report_bundle():
    scenarios = list(all_scenarios(_ground(2)))
    covering = [s for s in scenarios if s.simple_union_covers_ground()]
    assert covering
    for i, s in enumerate(covering[:3]):
        report = brute_force_equivalence_suite(s)
        assert report.agree
        bundle = report.json_bundle(i)
        assert bundle["index"] == i
        assert set(bundle) == {"scenario", "legs", "witnesses", "index"}
        assert set(bundle["legs"]) == set(report.legs)


def test_all_trees_cayley_counts():
    for n, count in ((1, 1), (2, 1), (3, 3), (4, 16)):
        trees = list(_all_trees(n))
        assert len(trees) == count
        assert len(set(trees)) == count


def test_labeled_graph_count_helper():
    assert count_labeled_graphs(2, 4) == 21
    assert count_labeled_graphs(1, 2) == 1
