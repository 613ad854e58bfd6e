"""Tree shapes used by the decomposition searches."""

from itertools import product

import pytest

from widthgames.trees import Tree, cubic_shapes, series_reduced_shapes, tree_from_adjacency


def test_tree_rejects_non_trees():
    with pytest.raises(ValueError):
        Tree(3, [(0, 1)])
    with pytest.raises(ValueError):
        Tree(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError):
        Tree(2, [(0, 0)])


def test_degree_and_leaves():
    t = Tree(4, [(0, 1), (1, 2), (1, 3)])
    assert t.degree(1) == 3
    assert sorted(t.neighbors(1)) == [0, 2, 3]
    assert t.leaves() == (0, 2, 3)


def test_side_splits_nodes():
    t = Tree(4, [(0, 1), (1, 2), (2, 3)])
    assert set(t.side(1, 2)) == {2, 3}
    assert set(t.side(2, 1)) == {0, 1}
    assert set(t.side(1, 2)) | set(t.side(2, 1)) == {0, 1, 2, 3}


def test_single_node_tree():
    t = Tree(1, [])
    assert t.leaves() == (0,)
    assert t.degree(0) == 0


def _double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_cubic_shape_counts(d):
    shapes = list(cubic_shapes(d))
    # distinct leaf-labeled cubic trees: (2d-5)!! once branching starts
    expected = 1 if d < 3 else _double_factorial(2 * d - 5)
    assert len(shapes) == expected
    for t in shapes:
        if d == 1:
            assert t.num_nodes == 1
        else:
            assert len(t.leaves()) == d
        for v in range(t.num_nodes):
            assert t.degree(v) in (0, 1, 3)


def _brute_series_reduced(d):
    """Count series-reduced leaf-labeled shapes by filtering all labeled
    trees (Pruefer sequences) and dividing out internal relabelings."""
    from math import factorial

    total = 0
    for extra in range(0, d):
        m = d + extra
        if m <= 2:
            total += 1
            continue
        count = 0
        for seq in product(range(m), repeat=m - 2):
            degree = [1] * m
            for v in seq:
                degree[v] += 1
            leaves = [v for v in range(m) if degree[v] == 1]
            if leaves != list(range(d)):
                continue
            if any(degree[v] == 2 for v in range(m)):
                continue
            count += 1
        total += count // factorial(extra)
    return total


@pytest.mark.parametrize("d,count", [(1, 1), (2, 1), (3, 1), (4, 4)])
def test_series_reduced_counts_match_brute_force(d, count):
    shapes = list(series_reduced_shapes(d))
    assert len(shapes) == count
    assert _brute_series_reduced(d) == count
    for t in shapes:
        for v in range(t.num_nodes):
            assert t.degree(v) != 2


def test_series_reduced_five_leaves():
    shapes = list(series_reduced_shapes(5))
    assert len(shapes) == 26
    cubic = [t for t in shapes if all(
        t.degree(v) in (1, 3) for v in range(t.num_nodes))]
    assert len(cubic) == 15


def test_tree_from_adjacency_keeps_order():
    adj = {"x": ["y"], "y": ["x", "z"], "z": ["y"]}
    tree, id_map = tree_from_adjacency(adj, keep_order=["z", "x"])
    assert id_map["z"] == 0 and id_map["x"] == 1
    assert tree.num_nodes == 3
    assert tree.degree(id_map["y"]) == 2
