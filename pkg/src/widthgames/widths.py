"""Width parameters as instances of the partition search game.

Three decomposition shapes live here.  A graph tree decomposition
carries a bag of vertices at every tree node.  A matroid tree
decomposition and a vertex-flow tree decomposition both place ground
elements on tree nodes and measure each node by the branches hanging
off it; they share storage and differ only in the node-width formula.

The generic entry point is width_parameter, which sweeps a level-k
scenario family upward from the smallest level where the family is
defined and returns the first level admitting a decomposition.  The
decomposition search is the authority; the search game is replayed as
a cross-check only at levels where the scenario axioms actually hold,
because below the axiom threshold the game and the decomposition can
legitimately disagree.
"""

from dataclasses import dataclass
from itertools import permutations

from .connectivity import (
    ConnectivityFn,
    carving_fn,
    cut_rank_fn,
    is_unit_or_empty,
    max_on_singletons,
    part_f_scenario,
    q_f_scenario,
)
from .decomposition import find_bdec, find_tdec
from .errors import LimitExceededError, ValidationError
from .game import CAPTAIN, GAME_LIMIT, solve
from .graphs import Graph, boundary_size_of_blocks, delta
from .matroids import Matroid, matroid_lambda, partition_width_matroid
from .partitions import enumerate_partitions
from .scenario import Scenario, check_axioms
from .trees import Tree, series_reduced_shapes, tree_from_adjacency

__all__ = [
    "TW_ORACLE_LIMIT",
    "GraphTreeDec",
    "GraphTreeDecReport",
    "MatroidTreeDec",
    "VFTreeDec",
    "WidthResult",
    "validate_graph_tdec",
    "graph_tdec_width",
    "optimal_graph_tdec",
    "tree_width",
    "mtw_node_width",
    "mtw_width",
    "matroid_tree_width",
    "vf_node_width",
    "vf_width",
    "vf_tree_width",
    "move_to_leaves",
    "graph_tdec_to_vf",
    "part_tw_k",
    "part_mtw_k",
    "width_parameter",
]

# Elimination orderings are enumerated exhaustively.
TW_ORACLE_LIMIT = 7


# ---------------------------------------------------------------------------
# graph tree decompositions


class GraphTreeDec:
    """A tree plus one vertex bag per node."""

    __slots__ = ("graph", "tree", "bags")

    def __init__(self, graph, tree, bags):
        if not isinstance(graph, Graph):
            raise TypeError("graph expected")
        if not isinstance(tree, Tree):
            raise TypeError("tree expected")
        bag_list = list(bags)
        if len(bag_list) != tree.num_nodes:
            raise ValueError(
                "need one bag per tree node, got %d for %d nodes"
                % (len(bag_list), tree.num_nodes)
            )
        masks = tuple(
            graph.vertices.check_mask(getattr(b, "mask", b)) for b in bag_list
        )
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "bags", masks)

    def __setattr__(self, key, value):
        raise AttributeError("GraphTreeDec is immutable")

    def bag_names(self, t):
        return self.graph.vertices.names_of(self.bags[t])

    def __repr__(self):
        shown = {
            t: ",".join(self.bag_names(t)) for t in range(self.tree.num_nodes)
        }
        return "GraphTreeDec(%r, %r)" % (self.tree, shown)


@dataclass(frozen=True)
class GraphTreeDecReport:
    vertex_cover: bool
    edge_cover: bool
    connected: bool
    witnesses: tuple

    @property
    def ok(self):
        return self.vertex_cover and self.edge_cover and self.connected


def validate_graph_tdec(graph, dec):
    """Check the three bag conditions: vertices covered, edges covered,
    and each vertex's bag set connected in the tree."""
    if dec.graph is not graph and dec.graph != graph:
        raise ValueError("decomposition belongs to a different graph")
    tree = dec.tree
    witnesses = []
    covered = 0
    for mask in dec.bags:
        covered |= mask
    vertex_cover = covered == graph.vertices.full_mask
    if not vertex_cover:
        missing = graph.vertices.full_mask & ~covered
        witnesses.append(("vertex-cover", graph.vertices.names_of(missing)))
    edge_cover = True
    for k, (i, j) in enumerate(graph._pairs):
        need = 1 << i | 1 << j
        if not any(mask & need == need for mask in dec.bags):
            edge_cover = False
            witnesses.append(("edge-cover", graph.edge_ground.names[k]))
    connected = True
    for v in range(len(graph.vertices)):
        bit = 1 << v
        holders = [t for t in range(tree.num_nodes) if dec.bags[t] & bit]
        if not holders:
            continue
        seen = {holders[0]}
        stack = [holders[0]]
        holder_set = set(holders)
        while stack:
            t = stack.pop()
            for s in tree.neighbors(t):
                if s in holder_set and s not in seen:
                    seen.add(s)
                    stack.append(s)
        if len(seen) != len(holders):
            connected = False
            witnesses.append(("connected", graph.vertices.names[v]))
    return GraphTreeDecReport(vertex_cover, edge_cover, connected, tuple(witnesses))


def graph_tdec_width(dec):
    """Largest bag size minus one."""
    return max(bin(mask).count("1") for mask in dec.bags) - 1


def optimal_graph_tdec(graph):
    """Exact graph tree width with a witness, by exhausting elimination
    orderings.

    Eliminating a vertex connects its remaining neighbours; the cost of
    an ordering is the largest neighbourhood met along the way.  The
    best ordering yields bags B_v = {v} plus v's later fill neighbours,
    each bag's tree parent being the earliest later fill neighbour.
    """
    n = len(graph.vertices)
    if n > TW_ORACLE_LIMIT:
        raise LimitExceededError(
            "elimination search handles at most %d vertices, got %d"
            % (TW_ORACLE_LIMIT, n)
        )
    base = [graph.adjacency_mask(name) for name in graph.vertices.names]
    best_cost = n
    best_order = None
    for order in permutations(range(n)):
        adj = list(base)
        alive = (1 << n) - 1
        cost = 0
        for v in order:
            alive &= ~(1 << v)
            nb = adj[v] & alive
            deg = bin(nb).count("1")
            if deg > cost:
                cost = deg
                if cost >= best_cost:
                    break
            rest = nb
            while rest:
                w = (rest & -rest).bit_length() - 1
                adj[w] |= nb & ~(1 << w)
                rest &= rest - 1
        else:
            if cost < best_cost:
                best_cost = cost
                best_order = order
                if best_cost == 0:
                    break
    order = best_order
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    adj = list(base)
    alive = (1 << n) - 1
    later = [0] * n
    for v in order:
        alive &= ~(1 << v)
        nb = adj[v] & alive
        later[v] = nb
        rest = nb
        while rest:
            w = (rest & -rest).bit_length() - 1
            adj[w] |= nb & ~(1 << w)
            rest &= rest - 1
    bags = [(1 << v) | later[v] for v in range(n)]
    edges = []
    for i, v in enumerate(order):
        if later[v]:
            parent = min(
                (pos[w], w) for w in _bit_indices(later[v])
            )[1]
            edges.append((v, parent))
        elif i + 1 < n:
            edges.append((v, order[i + 1]))
    dec = GraphTreeDec(graph, Tree(n, edges), bags)
    report = validate_graph_tdec(graph, dec)
    if not report.ok:
        raise ValidationError(
            "elimination witness failed validation", report.witnesses
        )
    return best_cost, dec


def _bit_indices(mask):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def tree_width(graph):
    return optimal_graph_tdec(graph)[0]


# ---------------------------------------------------------------------------
# element-on-node decompositions


class _ElementDec:
    """Tree plus a placement of every ground element on some node."""

    __slots__ = ("ground", "tree", "node_of")

    def __init__(self, ground, tree, node_of):
        if not isinstance(tree, Tree):
            raise TypeError("tree expected")
        placed = dict(node_of)
        extra = set(placed) - set(ground.names)
        if extra:
            raise ValueError(
                "placement mentions unknown elements %r" % (sorted(extra),)
            )
        for name in ground.names:
            if name not in placed:
                raise ValueError("element %r has no node" % (name,))
            t = placed[name]
            if not (isinstance(t, int) and 0 <= t < tree.num_nodes):
                raise ValueError("element %r placed on missing node %r" % (name, t))
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "tree", tree)
        object.__setattr__(
            self, "node_of", {name: placed[name] for name in ground.names}
        )

    def __setattr__(self, key, value):
        raise AttributeError("%s is immutable" % type(self).__name__)

    def mask_at(self, t):
        """Elements sitting on node t, as a mask."""
        mask = 0
        for name, node in self.node_of.items():
            if node == t:
                mask |= 1 << self.ground.bit(name)
        return mask

    def branch_masks(self, x):
        """One element mask per branch of the tree at node x.

        Elements placed on x itself appear in no branch.
        """
        tree = self.tree
        out = []
        for s in tree.neighbors(x):
            side = tree.side(x, s)
            mask = 0
            for name, node in self.node_of.items():
                if node in side:
                    mask |= 1 << self.ground.bit(name)
            out.append(mask)
        return tuple(out)

    def __repr__(self):
        return "%s(%r, %r)" % (type(self).__name__, self.tree, self.node_of)


class MatroidTreeDec(_ElementDec):
    """Matroid elements placed on tree nodes."""


class VFTreeDec(_ElementDec):
    """Graph edges placed on tree nodes, measured by vertex flow."""


def mtw_node_width(matroid, dec, x):
    """Rank contribution of the branches at x.

    With branches F_1..F_d this is sum r(E minus F_i) - (d-1) r(M); an
    isolated node holding everything scores r(M).
    """
    if dec.ground != matroid.ground:
        raise ValueError("decomposition is over a different ground set")
    full = matroid.ground.full_mask
    branches = dec.branch_masks(x)
    d = len(branches)
    total = sum(matroid.rank_mask(full & ~b) for b in branches)
    return total - (d - 1) * matroid.full_rank


def mtw_width(matroid, dec):
    return max(mtw_node_width(matroid, dec, x) for x in range(dec.tree.num_nodes))


def vf_node_width(graph, dec, x):
    """|V| + (d-1) c(G) - sum of c(G - F_i) over the branches F_i at x.

    c counts components with the branch's edges removed, isolated
    vertices included.
    """
    if dec.ground != graph.edge_ground:
        raise ValueError("decomposition is over a different edge set")
    full = graph.edge_ground.full_mask
    branches = dec.branch_masks(x)
    d = len(branches)
    total = sum(graph.component_count(full & ~b) for b in branches)
    return len(graph.vertices) + (d - 1) * graph.component_count() - total


def vf_width(graph, dec):
    return max(vf_node_width(graph, dec, x) for x in range(dec.tree.num_nodes))


def move_to_leaves(dec):
    """Push every element onto its own leaf.

    An element already alone on a leaf stays; every other element gets
    a fresh leaf hung on its current node.  Node widths never increase,
    so minimizing over leaf placements loses nothing.
    """
    tree = dec.tree
    count = {}
    for node in dec.node_of.values():
        count[node] = count.get(node, 0) + 1
    adj = {t: set(tree.neighbors(t)) for t in range(tree.num_nodes)}
    placed = {}
    next_id = tree.num_nodes
    for name in dec.ground.names:
        t = dec.node_of[name]
        if tree.degree(t) <= 1 and count[t] == 1:
            placed[name] = t
            continue
        adj[t].add(next_id)
        adj[next_id] = {t}
        placed[name] = next_id
        next_id += 1
    new_tree, id_map = tree_from_adjacency(adj, keep_order=range(next_id))
    return type(dec)(dec.ground, new_tree, {n: id_map[t] for n, t in placed.items()})


def _optimal_element_dec(ground, cls, width_of):
    """Minimize width_of over all placements of element groups on the
    leaves of series-reduced shapes.

    Pushing elements to leaves, deleting empty leaves and suppressing
    empty degree-2 nodes never increases any node width, so nonempty
    leaf groups on series-reduced shapes cover some optimum.
    """
    best = None
    best_dec = None
    names = ground.names
    for partition in enumerate_partitions(ground):
        blocks = partition.blocks
        d = len(blocks)
        for shape in series_reduced_shapes(d):
            for assignment in permutations(shape.leaves()):
                node_of = {}
                for block, leaf in zip(blocks, assignment):
                    for i in range(ground.size):
                        if block >> i & 1:
                            node_of[names[i]] = leaf
                dec = cls(ground, shape, node_of)
                value = width_of(dec)
                if best is None or value < best:
                    best = value
                    best_dec = dec
    return best, best_dec


def matroid_tree_width(matroid):
    """Exact matroid tree width with a witness, by exhaustive search."""
    return _optimal_element_dec(
        matroid.ground, MatroidTreeDec, lambda dec: mtw_width(matroid, dec)
    )


def vf_tree_width(graph):
    """Exact vertex-flow tree width with a witness, by exhaustive search."""
    return _optimal_element_dec(
        graph.edge_ground, VFTreeDec, lambda dec: vf_width(graph, dec)
    )


def graph_tdec_to_vf(graph, dec):
    """Turn a graph tree decomposition into a vertex-flow one of no
    larger width, for connected graphs.

    Contracting a bag into a containing neighbour keeps all three bag
    conditions; once no bag contains an adjacent one, every bag has a
    private vertex and each edge goes to a node whose bag holds both
    endpoints.
    """
    if not graph.is_connected:
        raise ValueError("conversion needs a connected graph")
    report = validate_graph_tdec(graph, dec)
    if not report.ok:
        raise ValidationError("input decomposition is invalid", report.witnesses)
    tree = dec.tree
    adj = {t: set(tree.neighbors(t)) for t in range(tree.num_nodes)}
    bag = {t: dec.bags[t] for t in range(tree.num_nodes)}
    changed = True
    while changed:
        changed = False
        for t in sorted(adj):
            for s in sorted(adj[t]):
                if bag[t] & ~bag[s]:
                    continue
                for r in adj[t]:
                    if r != s:
                        adj[r].discard(t)
                        adj[r].add(s)
                        adj[s].add(r)
                adj[s].discard(t)
                del adj[t]
                del bag[t]
                changed = True
                break
            if changed:
                break
    keep = sorted(adj)
    new_tree, id_map = tree_from_adjacency(adj, keep_order=keep)
    node_of = {}
    for k, (i, j) in enumerate(graph._pairs):
        need = 1 << i | 1 << j
        home = min(id_map[t] for t in keep if bag[t] & need == need)
        node_of[graph.edge_ground.names[k]] = home
    return VFTreeDec(graph.edge_ground, new_tree, node_of)


# ---------------------------------------------------------------------------
# level-k scenario families on graphs and matroids


def part_tw_k(graph, k):
    """Partitions of the edges whose boundary has at most k vertices,
    with single edges and the empty set as capture positions."""
    ground = graph.edge_ground

    def in_family(partition):
        if partition.ground != ground:
            raise ValueError("partition is over a different ground set")
        return boundary_size_of_blocks(graph, partition.blocks) <= k

    return Scenario(ground, in_family, is_unit_or_empty, kind_tag="part_tw^%d" % k)


def part_mtw_k(matroid, k):
    """Partitions of the matroid's ground set of width at most k."""

    def in_family(partition):
        return partition_width_matroid(matroid, partition) <= k

    return Scenario(
        matroid.ground, in_family, is_unit_or_empty, kind_tag="part_mtw^%d" % k
    )


# ---------------------------------------------------------------------------
# the generic sweep


@dataclass(frozen=True)
class WidthResult:
    kind: str
    value: int
    witness: object
    scenario: Scenario


def _sweep(kind, scenario_at, start, ceiling, finder, ground_size):
    k = start
    while k <= ceiling:
        scenario = scenario_at(k)
        dec = finder(scenario)
        if finder is find_tdec and ground_size <= GAME_LIMIT:
            axioms = check_axioms(scenario)
            if axioms.ok and scenario.simple_union_covers_ground():
                verdict = solve(scenario, monotone=True)
                if (verdict.winner == CAPTAIN) != (dec is not None):
                    raise ValidationError(
                        "decomposition search and game disagree",
                        (kind, k, verdict.winner, dec),
                    )
        if dec is not None:
            return WidthResult(kind, k, dec, scenario)
        k += 1
    raise ValidationError(
        "no decomposition found up to the guaranteed ceiling", (kind, ceiling)
    )


def width_parameter(kind, obj):
    """Smallest k whose level-k scenario admits a decomposition.

    kind selects the family: "tw" (edge partitions of a graph bounded
    by boundary size), "mtw" (matroid partition width), "vf_tw" (the
    cycle matroid's partition width), "tw_f" and "bw" (partition and
    bipartition families of a connectivity function), "rank_width" and
    "carving_width" (bw of a graph's cut-rank and carving functions).

    The sweep starts at the smallest level where the family is defined,
    so on very small inputs the answer can exceed the classical
    parameter computed by the dedicated oracles.
    """
    if kind == "tw":
        graph = _expect(obj, Graph, kind)
        ground = graph.edge_ground
        start = 1
        for name in ground.names:
            start = max(start, delta(graph, ground.subset([name])))
        return _sweep(
            kind, lambda k: part_tw_k(graph, k), start,
            max(len(graph.vertices), start), find_tdec, ground.size,
        )
    if kind == "mtw":
        matroid = _expect(obj, Matroid, kind)
        return _mtw_sweep(kind, matroid)
    if kind == "vf_tw":
        graph = _expect(obj, Graph, kind)
        if graph.edge_count == 0:
            raise ValueError("vertex-flow width needs at least one edge")
        return _mtw_sweep(kind, Matroid.graphic(graph))
    if kind == "tw_f":
        f = _expect(obj, ConnectivityFn, kind)
        start = max_on_singletons(f)
        ceiling = sum(f.value_mask(1 << i) for i in range(f.ground.size))
        return _sweep(
            kind, lambda k: part_f_scenario(f, k), start,
            max(ceiling, start), find_tdec, f.ground.size,
        )
    if kind == "bw":
        f = _expect(obj, ConnectivityFn, kind)
        return _bw_sweep(kind, f)
    if kind == "rank_width":
        graph = _expect(obj, Graph, kind)
        return _bw_sweep(kind, cut_rank_fn(graph))
    if kind == "carving_width":
        graph = _expect(obj, Graph, kind)
        return _bw_sweep(kind, carving_fn(graph))
    raise ValueError("unknown width kind %r" % (kind,))


def _expect(obj, cls, kind):
    if not isinstance(obj, cls):
        raise TypeError(
            "%s expects a %s, got %s" % (kind, cls.__name__, type(obj).__name__)
        )
    return obj


def _mtw_sweep(kind, matroid):
    ground = matroid.ground
    start = 1
    for name in ground.names:
        start = max(start, matroid_lambda(matroid, ground.subset([name])))
    ceiling = max(matroid.full_rank, start)
    return _sweep(
        kind, lambda k: part_mtw_k(matroid, k), start, ceiling, find_tdec,
        ground.size,
    )


def _bw_sweep(kind, f):
    ground = f.ground
    start = max_on_singletons(f)
    ceiling = start
    for mask in range(1, ground.full_mask + 1):
        value = f.value_mask(mask)
        if value > ceiling:
            ceiling = value
    return _sweep(
        kind, lambda k: q_f_scenario(f, k), start, ceiling, find_bdec, ground.size
    )
