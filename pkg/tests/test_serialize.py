"""JSON round trips and DOT rendering."""

import json

import pytest

from widthgames import (
    CAPTAIN,
    Graph,
    GroundSet,
    Matroid,
    ParseError,
    Partition,
    find_bdec,
    find_bramble,
    find_exact_search_tree,
    find_tdec,
    graph_tdec_to_vf,
    matroid_tree_width,
    optimal_graph_tdec,
    part_tw_k,
    solve,
    width_parameter,
)
from widthgames.serialize import (
    bramble_from_json,
    bramble_to_json,
    dec_from_json,
    dec_to_dot,
    dec_to_json,
    matroid_from_json,
    partition_from_json,
    partition_to_json,
    scenario_from_json,
    scenario_to_json,
    search_tree_from_json,
    search_tree_to_dot,
    search_tree_to_json,
    strategy_from_json,
    strategy_to_dot,
    strategy_to_json,
    verdict_to_json,
    width_result_to_json,
)

K3 = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])
LEVEL3 = part_tw_k(K3, 3)


def roundtrip_stable(obj, to_json, from_json):
    """obj -> json -> obj -> json must reproduce the first json."""
    first = to_json(obj)
    json.dumps(first)
    rebuilt = from_json(first)
    assert to_json(rebuilt) == first
    return rebuilt


def test_partition_round_trip():
    g = GroundSet("abcd")
    p = Partition(g, [0b0011, 0b1100])
    rebuilt = roundtrip_stable(
        p, partition_to_json, lambda obj: partition_from_json(g, obj)
    )
    assert rebuilt == p
    with pytest.raises(ParseError):
        partition_from_json(g, {"blocks": [["a"], ["b"]]})
    with pytest.raises(ParseError):
        partition_from_json(g, ["a"])


def test_scenario_round_trip():
    explicit = LEVEL3.explicit()
    rebuilt = roundtrip_stable(explicit, scenario_to_json, scenario_from_json)
    assert rebuilt.kind_tag == "part_tw^3"
    assert rebuilt.partition_members() == explicit.partition_members()
    assert rebuilt.simple_members() == explicit.simple_members()
    with pytest.raises(ParseError):
        scenario_from_json({"ground": ["a"], "partitions": []})


def test_matroid_from_json():
    m = matroid_from_json(
        {"rows": [[1, 0, 1, 1], [0, 1, 1, 1]], "elements": ["w", "x", "y", "z"]}
    )
    assert m.ground.names == ("w", "x", "y", "z")
    assert m.full_rank == 2
    with pytest.raises(ParseError):
        matroid_from_json({"elements": ["a"]})


def test_leaf_labeled_round_trips():
    tdec = find_tdec(LEVEL3)
    again = roundtrip_stable(tdec, dec_to_json, dec_from_json)
    assert again == tdec
    bdec = find_bdec(LEVEL3)
    assert roundtrip_stable(bdec, dec_to_json, dec_from_json) == bdec

    from widthgames import Tree, TreeDec

    g = GroundSet("ab")
    path = TreeDec(g, Tree(3, [(0, 1), (1, 2)]), {0: 1, 2: 2})
    blob = dec_to_json(path)
    blob["type"] = "bdec"
    with pytest.raises(ParseError):
        dec_from_json(blob)
    with pytest.raises(ParseError):
        dec_from_json({"type": "mystery", "tree": {"nodes": 1, "edges": []}})


def test_graph_tdec_round_trip_needs_graph():
    _, dec = optimal_graph_tdec(K3)
    blob = dec_to_json(dec)
    with pytest.raises(ParseError):
        dec_from_json(blob)
    rebuilt = dec_from_json(blob, graph=K3)
    assert dec_to_json(rebuilt) == blob


def test_element_placement_round_trips():
    _, mdec = matroid_tree_width(Matroid.graphic(K3))
    assert roundtrip_stable(mdec, dec_to_json, dec_from_json).node_of == mdec.node_of
    vdec = graph_tdec_to_vf(K3, optimal_graph_tdec(K3)[1])
    rebuilt = roundtrip_stable(vdec, dec_to_json, dec_from_json)
    assert type(rebuilt) is type(vdec)


def test_search_tree_round_trip():
    st = find_exact_search_tree(LEVEL3)
    rebuilt = roundtrip_stable(st, search_tree_to_json, search_tree_from_json)
    assert rebuilt == st
    with pytest.raises(ParseError):
        search_tree_from_json({"type": "tdec"})


def test_strategy_and_verdict_serialization():
    verdict = solve(LEVEL3, monotone=True)
    blob = verdict_to_json(verdict)
    assert blob["winner"] == CAPTAIN
    strat = verdict.strategy
    rebuilt = roundtrip_stable(
        strat,
        strategy_to_json,
        lambda obj: strategy_from_json(LEVEL3.ground, obj),
    )
    assert rebuilt.monotone
    assert rebuilt.root.partition == strat.root.partition


def test_bramble_round_trip():
    bramble = find_bramble(part_tw_k(K3, 1))
    rebuilt = roundtrip_stable(bramble, bramble_to_json, bramble_from_json)
    assert set(rebuilt.masks()) == set(bramble.masks())
    with pytest.raises(ParseError):
        bramble_from_json({"sets": [["a"]]})


def test_width_result_to_json():
    result = width_parameter("rank_width", K3)
    blob = width_result_to_json(result)
    json.dumps(blob)
    assert blob["parameter"] == "rank_width"
    assert blob["value"] == 1
    assert "witness" in blob


def test_dot_outputs_name_every_node():
    tdec = find_tdec(LEVEL3)
    dot = dec_to_dot(tdec)
    assert dot.startswith("graph ")
    for leaf in tdec.tree.leaves():
        assert " n%d " % leaf in dot or "n%d [" % leaf in dot

    st = find_exact_search_tree(LEVEL3)
    dot = search_tree_to_dot(st)
    assert "->" in dot or "--" in dot

    strat = solve(LEVEL3).strategy
    dot = strategy_to_dot(strat)
    assert dot.startswith("digraph ") or dot.startswith("graph ")
