"""JSON and DOT forms for the objects the command line reads and writes.

Every *_to_json function returns plain dicts and lists ready for
json.dumps; every *_from_json accepts the parsed structure back and
rebuilds the object, raising ParseError on malformed input.  Ground
elements travel by name, never by bit position, so files stay readable
and reorderings stay harmless.
"""

from .decomposition import BranchDec, SearchTree, TreeDec
from .errors import ParseError
from .game import Bramble, StrategyNode, StrategyTree, Verdict
from .ground import GroundSet, Subset
from .matroids import Matroid
from .partitions import Partition
from .scenario import ExplicitScenario
from .trees import Tree
from .widths import GraphTreeDec, MatroidTreeDec, VFTreeDec

__all__ = [
    "scenario_to_json",
    "scenario_from_json",
    "partition_to_json",
    "partition_from_json",
    "matroid_from_json",
    "dec_to_json",
    "dec_from_json",
    "search_tree_to_json",
    "search_tree_from_json",
    "strategy_to_json",
    "strategy_from_json",
    "verdict_to_json",
    "bramble_to_json",
    "bramble_from_json",
    "width_result_to_json",
    "dec_to_dot",
    "search_tree_to_dot",
    "strategy_to_dot",
]


def _expect_dict(obj, what):
    if not isinstance(obj, dict):
        raise ParseError("%s must be a JSON object, got %s" % (what, type(obj).__name__))
    return obj


def _expect_list(obj, what):
    if not isinstance(obj, list):
        raise ParseError("%s must be a JSON array, got %s" % (what, type(obj).__name__))
    return obj


def _ground_from(obj, what="ground"):
    names = _expect_list(obj, what)
    try:
        return GroundSet(names)
    except (ValueError, TypeError) as exc:
        raise ParseError("bad %s: %s" % (what, exc)) from None


def _names(ground, mask):
    return list(ground.names_of(mask))


def _mask_from(ground, obj, what):
    names = _expect_list(obj, what)
    try:
        return ground.mask_of(names)
    except KeyError as exc:
        raise ParseError("bad %s: %s" % (what, exc)) from None


# ---------------------------------------------------------------------------
# scenarios and partitions


def partition_to_json(p):
    return [_names(p.ground, b) for b in p.blocks]


def partition_from_json(ground, obj):
    blocks = _expect_list(obj, "partition")
    masks = [_mask_from(ground, b, "block") for b in blocks]
    try:
        return Partition(ground, masks)
    except ValueError as exc:
        raise ParseError("bad partition: %s" % exc) from None


def scenario_to_json(s):
    return {
        "ground": list(s.ground.names),
        "partitions": [partition_to_json(p) for p in s.partition_members()],
        "simples": [_names(s.ground, sub.mask) for sub in s.simple_members()],
        "kind": s.kind_tag,
    }


def scenario_from_json(obj):
    obj = _expect_dict(obj, "scenario")
    for key in ("ground", "partitions", "simples"):
        if key not in obj:
            raise ParseError("scenario is missing %r" % key)
    ground = _ground_from(obj["ground"])
    partitions = [
        partition_from_json(ground, p)
        for p in _expect_list(obj["partitions"], "partitions")
    ]
    simples = [
        Subset(ground, _mask_from(ground, s, "simple set"))
        for s in _expect_list(obj["simples"], "simples")
    ]
    return ExplicitScenario(
        ground, partitions, simples, kind_tag=obj.get("kind", "explicit")
    )


def matroid_from_json(obj):
    """Matroid from dense 0/1 rows: {"rows": [...], "elements": [...]}."""
    obj = _expect_dict(obj, "matroid")
    if "rows" not in obj:
        raise ParseError("matroid is missing 'rows'")
    rows = _expect_list(obj["rows"], "rows")
    names = obj.get("elements")
    return Matroid.from_matrix(rows, element_names=names)


# ---------------------------------------------------------------------------
# decompositions and search trees

_DEC_TAGS = {
    TreeDec: "tdec",
    BranchDec: "bdec",
    GraphTreeDec: "graph-tdec",
    MatroidTreeDec: "matroid-tdec",
    VFTreeDec: "vf-tdec",
}


def _tree_json(tree):
    return {"nodes": tree.num_nodes, "edges": [list(e) for e in tree.edges]}


def _tree_from(obj, what="tree"):
    obj = _expect_dict(obj, what)
    try:
        return Tree(obj["nodes"], [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("bad %s: %s" % (what, exc)) from None


def dec_to_json(dec):
    tag = _DEC_TAGS.get(type(dec))
    if tag is None:
        raise TypeError("no JSON form for %r" % type(dec).__name__)
    out = {"type": tag, "tree": _tree_json(dec.tree)}
    if isinstance(dec, (TreeDec, BranchDec)):
        out["ground"] = list(dec.ground.names)
        out["leaf_labels"] = [
            [leaf, _names(dec.ground, mask)] for leaf, mask in sorted(dec.labels.items())
        ]
    elif isinstance(dec, GraphTreeDec):
        out["vertices"] = list(dec.graph.vertices.names)
        out["bags"] = [list(dec.bag_names(t)) for t in range(dec.tree.num_nodes)]
    else:
        out["ground"] = list(dec.ground.names)
        out["node_of"] = [[name, dec.node_of[name]] for name in dec.ground.names]
    return out


def dec_from_json(obj, graph=None):
    """Rebuild a decomposition; graph-tdec needs the graph passed in."""
    obj = _expect_dict(obj, "decomposition")
    tag = obj.get("type")
    tree = _tree_from(obj.get("tree"))
    if tag in ("tdec", "bdec"):
        ground = _ground_from(obj.get("ground"))
        labels = {}
        for entry in _expect_list(obj.get("leaf_labels"), "leaf_labels"):
            leaf, names = entry
            labels[leaf] = _mask_from(ground, names, "leaf label")
        cls = TreeDec if tag == "tdec" else BranchDec
        try:
            return cls(ground, tree, labels)
        except ValueError as exc:
            raise ParseError("bad %s: %s" % (tag, exc)) from None
    if tag == "graph-tdec":
        if graph is None:
            raise ParseError("graph-tdec needs its graph to rebuild")
        bags = [
            graph.vertices.mask_of(_expect_list(b, "bag"))
            for b in _expect_list(obj.get("bags"), "bags")
        ]
        try:
            return GraphTreeDec(graph, tree, bags)
        except ValueError as exc:
            raise ParseError("bad graph-tdec: %s" % exc) from None
    if tag in ("matroid-tdec", "vf-tdec"):
        ground = _ground_from(obj.get("ground"))
        node_of = {}
        for entry in _expect_list(obj.get("node_of"), "node_of"):
            name, node = entry
            node_of[name] = node
        cls = MatroidTreeDec if tag == "matroid-tdec" else VFTreeDec
        try:
            return cls(ground, tree, node_of)
        except ValueError as exc:
            raise ParseError("bad %s: %s" % (tag, exc)) from None
    raise ParseError("unknown decomposition type %r" % (tag,))


def search_tree_to_json(st):
    return {
        "type": "searchtree",
        "ground": list(st.ground.names),
        "tree": _tree_json(st.tree),
        "arc_labels": [
            [s, t, _names(st.ground, mask)]
            for (s, t), mask in sorted(st.arc_labels.items())
        ],
    }


def search_tree_from_json(obj):
    obj = _expect_dict(obj, "search tree")
    if obj.get("type") not in (None, "searchtree"):
        raise ParseError("not a search tree: type is %r" % obj.get("type"))
    ground = _ground_from(obj.get("ground"))
    tree = _tree_from(obj.get("tree"))
    labels = {}
    for entry in _expect_list(obj.get("arc_labels"), "arc_labels"):
        s, t, names = entry
        labels[(s, t)] = _mask_from(ground, names, "arc label")
    try:
        return SearchTree(ground, tree, labels)
    except ValueError as exc:
        raise ParseError("bad search tree: %s" % exc) from None


# ---------------------------------------------------------------------------
# game artifacts


def strategy_to_json(strat):
    def node(n):
        return {
            "partition": partition_to_json(n.partition),
            "space": _names(n.partition.ground, n.space.mask),
            "move": None if n.move is None else partition_to_json(n.move),
            "children": [node(c) for c in n.children],
        }

    return {"monotone": strat.monotone, "root": node(strat.root)}


def strategy_from_json(ground, obj):
    obj = _expect_dict(obj, "strategy")

    def node(entry):
        entry = _expect_dict(entry, "strategy node")
        partition = partition_from_json(ground, entry.get("partition"))
        space = Subset(ground, _mask_from(ground, entry.get("space"), "space"))
        move = entry.get("move")
        if move is not None:
            move = partition_from_json(ground, move)
        children = tuple(
            node(c) for c in _expect_list(entry.get("children"), "children")
        )
        return StrategyNode(partition, space, move, children)

    return StrategyTree(node(obj.get("root")), bool(obj.get("monotone")))


def verdict_to_json(verdict):
    out = {"winner": verdict.winner}
    if verdict.strategy is not None:
        out["strategy"] = strategy_to_json(verdict.strategy)
    return out


def bramble_to_json(bramble):
    return {
        "ground": list(bramble.ground.names),
        "sets": [_names(bramble.ground, s.mask) for s in bramble.sets],
    }


def bramble_from_json(obj):
    obj = _expect_dict(obj, "bramble")
    ground = _ground_from(obj.get("ground"))
    sets = [
        _mask_from(ground, s, "bramble set")
        for s in _expect_list(obj.get("sets"), "sets")
    ]
    try:
        return Bramble(ground, sets)
    except ValueError as exc:
        raise ParseError("bad bramble: %s" % exc) from None


def width_result_to_json(result):
    return {
        "parameter": result.kind,
        "value": result.value,
        "witness": dec_to_json(result.witness),
    }


# ---------------------------------------------------------------------------
# DOT export


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _set_text(ground, mask):
    return "{%s}" % ",".join(ground.names_of(mask))


def dec_to_dot(dec):
    """Leaf-labeled or bag-labeled tree as an undirected DOT graph."""
    lines = ["graph dec {", "  node [shape=ellipse];"]
    for t in range(dec.tree.num_nodes):
        if isinstance(dec, (TreeDec, BranchDec)):
            text = _set_text(dec.ground, dec.labels[t]) if t in dec.labels else ""
        elif isinstance(dec, GraphTreeDec):
            text = "{%s}" % ",".join(dec.bag_names(t))
        else:
            mine = [n for n, node in dec.node_of.items() if node == t]
            text = "{%s}" % ",".join(sorted(mine))
        label = ("%d %s" % (t, text)).strip()
        lines.append('  n%d [label="%s"];' % (t, _dot_escape(label)))
    for u, v in dec.tree.edges:
        lines.append("  n%d -- n%d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def search_tree_to_dot(st):
    """Both arc labels of each edge, shown as directed pairs."""
    lines = ["digraph searchtree {", "  node [shape=circle];"]
    for t in range(st.tree.num_nodes):
        lines.append('  n%d [label="%d"];' % (t, t))
    for s, t in st.tree.edges:
        fwd = _set_text(st.ground, st.arc_labels[(s, t)])
        back = _set_text(st.ground, st.arc_labels[(t, s)])
        lines.append('  n%d -> n%d [label="%s"];' % (s, t, _dot_escape(fwd)))
        lines.append('  n%d -> n%d [label="%s"];' % (t, s, _dot_escape(back)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def strategy_to_dot(strat):
    """Strategy tree: nodes show robber space, edges show announcements."""
    lines = ["digraph strategy {", "  node [shape=box];"]
    ground = strat.ground
    counter = [0]

    def partition_text(p):
        return "".join(_set_text(ground, b) for b in p.blocks)

    def walk(node):
        my_id = counter[0]
        counter[0] += 1
        text = "space %s" % _set_text(ground, node.space.mask)
        if node.move is not None:
            text += "\nannounce %s" % partition_text(node.move)
        lines.append(
            '  n%d [label="%s"];' % (my_id, _dot_escape(text).replace("\n", "\\n"))
        )
        for child in node.children:
            child_id = walk(child)
            lines.append("  n%d -> n%d;" % (my_id, child_id))
        return my_id

    walk(strat.root)
    lines.append("}")
    return "\n".join(lines) + "\n"
