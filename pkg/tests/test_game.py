"""Solver, strategy replay and bramble checks on small scenarios."""

import pytest

from widthgames import (
    CAPTAIN,
    ROBBER,
    GAME_LIMIT,
    Bramble,
    ExplicitScenario,
    Graph,
    GroundSet,
    LimitExceededError,
    Partition,
    Position,
    Subset,
    bramble_escape_check,
    check_bramble,
    find_bramble,
    legal_robber_moves,
    part_tw_k,
    solve,
    strategy_to_tdec,
    validate_tdec,
    verify_strategy,
)

K3 = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])


def test_robber_wins_level_one():
    verdict = solve(part_tw_k(K3, 1))
    assert verdict.winner == ROBBER
    assert verdict.strategy is None


def test_captain_wins_level_three():
    scenario = part_tw_k(K3, 3)
    verdict = solve(scenario)
    assert verdict.winner == CAPTAIN
    strat = verdict.strategy
    assert strat is not None
    assert not strat.monotone
    assert verify_strategy(scenario, strat)


def test_monotone_solve_agrees_on_levels():
    for k in (1, 2, 3):
        scenario = part_tw_k(K3, k)
        free = solve(scenario)
        mono = solve(scenario, monotone=True)
        assert free.winner == mono.winner


def test_monotone_strategy_verifies_as_monotone():
    scenario = part_tw_k(K3, 3)
    verdict = solve(scenario, monotone=True)
    strat = verdict.strategy
    assert strat.monotone
    assert verify_strategy(scenario, strat)


def test_strategy_converts_to_tree_decomposition():
    scenario = part_tw_k(K3, 3)
    strat = solve(scenario, monotone=True).strategy
    dec = strategy_to_tdec(scenario, strat)
    assert validate_tdec(scenario, dec).ok


def test_positions_map_has_terminal_rank_zero():
    scenario = part_tw_k(K3, 3)
    verdict = solve(scenario)
    discrete = Partition.discrete(scenario.ground)
    ranks = {
        rank for (p, s), rank in verdict.positions.items() if p == discrete
    }
    assert ranks == {0}


def test_solve_rejects_large_ground():
    ground = GroundSet("abcdefgh")
    assert ground.size == GAME_LIMIT + 1
    scenario = ExplicitScenario(
        ground, [Partition.indiscrete(ground)], [Subset(ground, 0)]
    )
    with pytest.raises(LimitExceededError):
        solve(scenario)


def test_legal_robber_moves_follow_the_join():
    scenario = part_tw_k(K3, 3)
    ground = scenario.ground
    opening = Position(Partition.indiscrete(ground), 0)
    announce = Partition(ground, [0b001, 0b110])
    moves = legal_robber_moves(scenario, opening, announce)
    spaces = sorted(pos.space_mask() for pos, _ in moves)
    assert spaces == [0b001, 0b110, 0b110]
    for pos, captured in moves:
        assert captured == (pos.space_mask() == 0b001)

    cornered = Position(announce, 0)
    again = legal_robber_moves(scenario, cornered, Partition.discrete(ground))
    assert all(captured for _, captured in again)
    assert sorted(pos.robber for pos, _ in again) == [0]


def test_legal_robber_moves_reject_foreign_announcement():
    scenario = part_tw_k(K3, 1)
    ground = scenario.ground
    opening = Position(Partition.indiscrete(ground), 1)
    with pytest.raises(ValueError):
        legal_robber_moves(scenario, opening, Partition.discrete(ground))


def test_bramble_found_exactly_when_robber_wins():
    for k in (1, 2, 3):
        scenario = part_tw_k(K3, k)
        bramble = find_bramble(scenario)
        if solve(scenario).winner == ROBBER:
            assert bramble is not None
            report = check_bramble(scenario, bramble)
            assert report.ok
            assert report.witnesses == ()
        else:
            assert bramble is None


def test_check_bramble_flags_defects():
    scenario = part_tw_k(K3, 3)
    ground = scenario.ground
    simple = Bramble(ground, (0b001,))
    report = check_bramble(scenario, simple)
    assert not report.avoids
    assert any(tag == "SIMPLE" for tag, _ in report.witnesses)
    missing = Bramble(ground, (0b111,))
    report = check_bramble(scenario, missing)
    assert not report.covers
    assert any(tag == "MISSES" for tag, _ in report.witnesses)


def test_bramble_survives_played_announcements():
    scenario = part_tw_k(K3, 1)
    bramble = find_bramble(scenario)
    ground = scenario.ground
    plays = [
        [p for p in scenario.partition_members() if len(p.blocks) == 2][:3],
        [Partition.indiscrete(ground)] * 2,
    ]
    assert bramble_escape_check(scenario, bramble, plays)


def test_escape_check_rejects_non_avoiding_family():
    scenario = part_tw_k(K3, 3)
    bad = Bramble(scenario.ground, (0b111,))
    with pytest.raises(Exception):
        bramble_escape_check(scenario, bad, [])
