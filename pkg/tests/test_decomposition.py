"""Decomposition validators, rewriting and conversions."""

import pytest

from widthgames import (
    BranchDec,
    ExplicitScenario,
    Graph,
    GroundSet,
    Partition,
    SearchTree,
    Subset,
    Tree,
    ValidationError,
    bdec_to_tdec_cubed,
    cubed_scenario,
    enumerate_partitions,
    find_bdec,
    find_exact_search_tree,
    find_tdec,
    make_exact,
    make_exact_with_trace,
    part_tw_k,
    search_tree_to_tdec,
    tdec_to_bdec,
    tdec_to_search_tree,
    TreeDec,
    validate_bdec,
    validate_search_tree,
    validate_tdec,
)

K3 = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])
LEVEL3 = part_tw_k(K3, 3)
LEVEL1 = part_tw_k(K3, 1)


def everything_scenario(names):
    """All partitions in the family, all subsets simple."""
    g = GroundSet(names)
    return ExplicitScenario(
        g,
        list(enumerate_partitions(g)),
        [Subset(g, m) for m in range(g.full_mask + 1)],
    )


def star_exact_tree(scenario):
    st = find_exact_search_tree(scenario)
    assert st is not None
    return st


def test_leaf_labels_must_cover_exactly_the_leaves():
    g = GroundSet("ab")
    tree = Tree(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        TreeDec(g, tree, {0: 1})
    with pytest.raises(ValueError):
        TreeDec(g, tree, {0: 1, 1: 0, 2: 2})


def test_branch_dec_requires_cubic_tree():
    g = GroundSet("ab")
    path = Tree(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        BranchDec(g, path, {0: 1, 2: 2})
    star = Tree(4, [(0, 3), (1, 3), (2, 3)])
    dec = BranchDec(g, star, {0: 1, 1: 2, 2: 0})
    assert dec.tree.is_cubic()


def test_search_tree_label_bookkeeping():
    g = GroundSet("ab")
    edge = Tree(2, [(0, 1)])
    with pytest.raises(ValueError):
        SearchTree(g, Tree(1, []), {})
    with pytest.raises(ValueError):
        SearchTree(g, edge, {(0, 1): 3})
    with pytest.raises(ValueError):
        SearchTree(g, edge, {(0, 1): 3, (1, 0): 0, (0, 0): 0})
    st = SearchTree(g, edge, {(0, 1): 3, (1, 0): 0})
    assert st.label(0, 1) == Subset(g, 3)
    assert st.leaf_entering_masks() == {0: 0, 1: 3}


def test_validate_tdec_accepts_found_decomposition():
    dec = find_tdec(LEVEL3)
    assert dec is not None
    report = validate_tdec(LEVEL3, dec)
    assert report.ok
    assert report.witnesses == ()


def test_validate_tdec_flags_leaf_and_node_defects():
    ground = LEVEL3.ground
    star = Tree(4, [(0, 3), (1, 3), (2, 3)])
    overlap = TreeDec(ground, star, {0: 0b011, 1: 0b110, 2: 0b100})
    report = validate_tdec(LEVEL3, overlap)
    assert not report.td1
    assert any(w[0] == "TD1" for w in report.witnesses)

    hole = TreeDec(ground, star, {0: 0b001, 1: 0b010, 2: 0})
    report = validate_tdec(LEVEL3, hole)
    assert not report.td1
    assert any(w[1] == "not-covering" for w in report.witnesses)

    good = TreeDec(ground, star, {0: 0b001, 1: 0b010, 2: 0b100})
    report = validate_tdec(LEVEL1, good)
    assert report.td1 and not report.td2
    assert any(w[0] == "TD2" for w in report.witnesses)


def test_validate_bdec_accepts_found_decomposition():
    dec = find_bdec(LEVEL3)
    assert dec is not None
    assert validate_bdec(LEVEL3, dec).ok
    assert find_bdec(LEVEL1) is None


def test_exact_search_tree_report_fields():
    st = star_exact_tree(LEVEL3)
    report = validate_search_tree(LEVEL3, st, require_exact=True)
    assert report.ok and report.exact and report.fact1
    assert find_exact_search_tree(LEVEL1) is None


def test_zeroed_leaf_label_breaks_only_exactness():
    st = star_exact_tree(LEVEL3)
    leaf = st.tree.leaves()[0]
    (nb,) = st.tree.neighbors(leaf)
    labels = dict(st.arc_labels)
    labels[(leaf, nb)] = 0
    damaged = SearchTree(st.ground, st.tree, labels)
    loose = validate_search_tree(LEVEL3, damaged)
    assert loose.ok and not loose.exact
    strict = validate_search_tree(LEVEL3, damaged, require_exact=True)
    assert not strict.ok
    assert any(w[0] == "EXACT" for w in strict.witnesses)


def test_make_exact_repairs_and_traces():
    st = star_exact_tree(LEVEL3)
    labels = dict(st.arc_labels)
    for leaf in st.tree.leaves():
        (nb,) = st.tree.neighbors(leaf)
        labels[(leaf, nb)] = 0
    damaged = SearchTree(st.ground, st.tree, labels)
    repaired, trace = make_exact_with_trace(LEVEL3, damaged)
    assert validate_search_tree(LEVEL3, repaired, require_exact=True).ok
    assert len(trace) >= 2
    assert all(a < b for a, b in zip(trace, trace[1:]))
    dec = search_tree_to_tdec(LEVEL3, repaired)
    assert validate_tdec(LEVEL3, dec).ok


def test_make_exact_needs_an_internal_node():
    g = LEVEL3.ground
    st = SearchTree(g, Tree(2, [(0, 1)]), {(0, 1): g.full_mask, (1, 0): 0})
    with pytest.raises(ValueError):
        make_exact(LEVEL3, st)


def test_make_exact_rejects_nonconforming_input():
    st = star_exact_tree(LEVEL3)
    labels = {arc: 0 for arc in st.arc_labels}
    broken = SearchTree(st.ground, st.tree, labels)
    with pytest.raises(ValidationError):
        make_exact(LEVEL3, broken)


def test_make_exact_family_compatibility():
    st = star_exact_tree(LEVEL3)
    ground = st.ground
    singletons = [Subset(ground, 1 << i) for i in range(ground.size)]
    kept = make_exact(LEVEL3, st, compatible_with=singletons)
    for leaf, _ in sorted(kept.leaf_entering_masks().items()):
        (nb,) = kept.tree.neighbors(leaf)
        out = kept.arc_labels[(leaf, nb)]
        assert any(s.mask & ~out == 0 for s in singletons)
    with pytest.raises(ValidationError):
        make_exact(LEVEL3, st, compatible_with=[Subset(ground, ground.full_mask)])


def test_tdec_search_tree_round_trip():
    dec = find_tdec(LEVEL3)
    st = tdec_to_search_tree(LEVEL3, dec)
    assert validate_search_tree(LEVEL3, st, require_exact=True).ok
    back = search_tree_to_tdec(LEVEL3, st)
    assert back == dec


def test_one_node_decomposition_has_no_search_tree():
    scenario = everything_scenario("ab")
    dec = TreeDec(scenario.ground, Tree(1, []), {0: scenario.ground.full_mask})
    assert validate_tdec(scenario, dec).ok
    with pytest.raises(ValueError):
        tdec_to_search_tree(scenario, dec)


def test_tdec_to_bdec_suppresses_and_expands():
    scenario = everything_scenario("abcd")
    g = scenario.ground
    star = Tree(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    dec = TreeDec(g, star, {i: 1 << i for i in range(4)})
    bdec = tdec_to_bdec(scenario, dec)
    assert bdec.tree.is_cubic()
    assert validate_bdec(scenario, bdec).ok
    assert sorted(bdec.labels.values()) == [1, 2, 4, 8]

    path = Tree(4, [(0, 2), (2, 3), (3, 1)])
    dec2 = TreeDec(g, path, {0: 0b0011, 1: 0b1100})
    bdec2 = tdec_to_bdec(scenario, dec2)
    assert bdec2.tree.num_nodes == 2
    assert validate_bdec(scenario, bdec2).ok


def test_bdec_reads_as_cubed_tdec():
    scenario = everything_scenario("abcd")
    bdec = find_bdec(scenario)
    out = bdec_to_tdec_cubed(scenario, bdec)
    cubed = cubed_scenario(scenario)
    assert validate_tdec(cubed, out).ok
    assert any(len(p.blocks) == 3 for p in cubed.partition_members())


def test_finders_use_one_node_tree_when_full_set_is_simple():
    scenario = everything_scenario("abc")
    dec = find_tdec(scenario)
    assert dec.tree.num_nodes == 1
    assert dec.labels == {0: scenario.ground.full_mask}
    st = find_exact_search_tree(scenario)
    assert st.tree.num_nodes == 2
