"""Tree decompositions, branch decompositions and search trees.

All three structures pair a tree with subset labels over a scenario's
ground set.  Tree and branch decompositions label leaves; search trees
label both directions of every edge.  Validators report violations
rather than raising; conversions validate their output and raise when a
precondition was broken.

Empty labels are exempt from simple-family membership checks: a
two-sided split with an empty side canonicalizes to the one-block
partition, so the empty label carries no scenario content.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .errors import NotWeaklySubmodularError, ValidationError
from .ground import Subset, check_same_ground
from .partitions import Partition, submasks, triple_partitions
from .scenario import ExplicitScenario
from .trees import Tree, cubic_shapes, series_reduced_shapes, tree_from_adjacency

__all__ = [
    "TreeDec",
    "BranchDec",
    "SearchTree",
    "TreeDecReport",
    "BranchDecReport",
    "SearchTreeReport",
    "validate_tdec",
    "validate_bdec",
    "validate_search_tree",
    "make_exact",
    "make_exact_with_trace",
    "search_tree_to_tdec",
    "tdec_to_search_tree",
    "tdec_to_bdec",
    "bdec_to_tdec_cubed",
    "cubed_scenario",
    "find_tdec",
    "find_bdec",
    "find_exact_search_tree",
]


def _label_mask(ground, value):
    if isinstance(value, Subset):
        if value.ground != ground:
            check_same_ground(value, Subset(ground, 0))
        return value.mask
    return ground.check_mask(value)


class _LeafLabeled:
    """Common core of tree and branch decompositions."""

    __slots__ = ("ground", "tree", "labels", "_items")

    def __init__(self, ground, tree, leaf_labels):
        labels = {
            leaf: _label_mask(ground, value) for leaf, value in leaf_labels.items()
        }
        if set(labels) != set(tree.leaves()):
            raise ValueError(
                "labels must cover exactly the leaves %r" % (tree.leaves(),)
            )
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_items", tuple(sorted(labels.items())))

    def __setattr__(self, key, value):
        raise AttributeError("%s is immutable" % type(self).__name__)

    def label(self, leaf):
        return Subset(self.ground, self.labels[leaf])

    def leaf_subsets(self):
        return {leaf: Subset(self.ground, m) for leaf, m in self._items}

    def side_union(self, s, t):
        """Union of leaf labels on t's side of the edge {s,t}."""
        m = 0
        for v in self.tree.side(s, t):
            m |= self.labels.get(v, 0)
        return m

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.ground == other.ground
            and self.tree == other.tree
            and self._items == other._items
        )

    def __hash__(self):
        return hash((type(self).__name__, self.ground, self.tree, self._items))

    def __repr__(self):
        body = ", ".join(
            "%d:{%s}" % (leaf, ",".join(self.ground.names_of(m)))
            for leaf, m in self._items
        )
        return "%s(%r, %s)" % (type(self).__name__, self.tree, body)


class TreeDec(_LeafLabeled):
    """A tree whose leaves carry subset labels."""


class BranchDec(_LeafLabeled):
    """A leaf-labeled tree whose internal nodes all have degree three."""

    def __init__(self, ground, tree, leaf_labels):
        if not tree.is_cubic():
            raise ValueError("internal nodes must have degree exactly 3")
        super().__init__(ground, tree, leaf_labels)


class SearchTree:
    """A tree with a subset label on each direction of each edge."""

    __slots__ = ("ground", "tree", "arc_labels", "_items")

    def __init__(self, ground, tree, arc_labels):
        if tree.num_nodes < 2:
            raise ValueError("a search tree needs at least one edge")
        labels = {}
        for arc in tree.arcs():
            if arc not in arc_labels:
                raise ValueError("missing label for arc %r" % (arc,))
            labels[arc] = _label_mask(ground, arc_labels[arc])
        if len(arc_labels) != len(labels):
            raise ValueError("labels on non-arcs present")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "arc_labels", labels)
        object.__setattr__(self, "_items", tuple(sorted(labels.items())))

    def __setattr__(self, key, value):
        raise AttributeError("SearchTree is immutable")

    def label(self, s, t):
        return Subset(self.ground, self.arc_labels[(s, t)])

    def out_masks(self, t):
        """Labels of the arcs leaving t, in neighbor order."""
        return tuple(self.arc_labels[(t, w)] for w in self.tree.neighbors(t))

    def leaf_entering_masks(self):
        out = {}
        for leaf in self.tree.leaves():
            (nb,) = self.tree.neighbors(leaf)
            out[leaf] = self.arc_labels[(nb, leaf)]
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SearchTree)
            and self.ground == other.ground
            and self.tree == other.tree
            and self._items == other._items
        )

    def __hash__(self):
        return hash((self.ground, self.tree, self._items))

    def __repr__(self):
        body = ", ".join(
            "%d->%d:{%s}" % (s, t, ",".join(self.ground.names_of(m)))
            for (s, t), m in self._items
        )
        return "SearchTree(%r, %s)" % (self.tree, body)


@dataclass(frozen=True)
class TreeDecReport:
    td1: bool
    td2: bool
    witnesses: tuple

    @property
    def ok(self):
        return self.td1 and self.td2


@dataclass(frozen=True)
class BranchDecReport:
    cubic: bool
    bd1: bool
    bd2: bool
    witnesses: tuple

    @property
    def ok(self):
        return self.cubic and self.bd1 and self.bd2


@dataclass(frozen=True)
class SearchTreeReport:
    st1: bool
    st2: bool
    exact: bool
    partitions_ok: bool
    leaf_labels_ok: bool
    fact1: Optional[bool]
    witnesses: tuple
    ok: bool


def _check_leaf_partition(scenario, masks, witnesses, tag):
    """Labels must be pairwise disjoint, cover the ground set, and have
    every nonempty member in the simple family."""
    ok = True
    seen = 0
    for leaf, m in masks:
        if m & seen:
            ok = False
            witnesses.append((tag, "overlap", leaf))
        seen |= m
        if m and not scenario.contains_simple_mask(m):
            ok = False
            witnesses.append((tag, "not-simple", leaf, Subset(scenario.ground, m)))
    if seen != scenario.ground.full_mask:
        ok = False
        witnesses.append((tag, "not-covering", Subset(scenario.ground, seen)))
    return ok


def _member_partition(scenario, parts):
    """Canonical partition from possibly-empty parts, or None if they do
    not partition the ground set; second result is family membership."""
    try:
        p = Partition(scenario.ground, parts)
    except ValueError:
        return None, False
    return p, scenario.contains_partition(p)


def validate_tdec(scenario, dec):
    check_same_ground(scenario, dec)
    witnesses = []
    td1 = _check_leaf_partition(
        scenario, sorted(dec.labels.items()), witnesses, "TD1"
    )
    td2 = True
    for t in dec.tree.internal_nodes():
        parts = [dec.side_union(t, w) for w in dec.tree.neighbors(t)]
        p, member = _member_partition(scenario, parts)
        if not member:
            td2 = False
            witnesses.append(("TD2", t, p))
    return TreeDecReport(td1, td2, tuple(witnesses))


def validate_bdec(scenario, dec):
    check_same_ground(scenario, dec)
    witnesses = []
    cubic = dec.tree.is_cubic()
    if not cubic:
        witnesses.append(("CUBIC",))
    bd1 = _check_leaf_partition(
        scenario, sorted(dec.labels.items()), witnesses, "BD1"
    )
    bd2 = True
    for u, v in dec.tree.edges:
        parts = (dec.side_union(v, u), dec.side_union(u, v))
        p, member = _member_partition(scenario, parts)
        if not member:
            bd2 = False
            witnesses.append(("BD2", (u, v), p))
    return BranchDecReport(cubic, bd1, bd2, tuple(witnesses))


def validate_search_tree(scenario, st, require_exact=False, require_scenario=True):
    check_same_ground(scenario, st)
    ground = scenario.ground
    full = ground.full_mask
    witnesses = []
    tree = st.tree

    st1 = True
    for t in tree.internal_nodes():
        out = st.out_masks(t)
        seen = 0
        good = True
        for m in out:
            if m & seen:
                good = False
            seen |= m
        if not good or seen != full:
            st1 = False
            witnesses.append(("ST1", t))

    st2 = True
    exact = True
    for s, t in tree.edges:
        a, b = st.arc_labels[(s, t)], st.arc_labels[(t, s)]
        if a & b:
            st2 = False
            witnesses.append(("ST2", (s, t)))
        if a | b != full:
            exact = False
            if require_exact:
                witnesses.append(("EXACT", (s, t)))

    partitions_ok = True
    for t in tree.internal_nodes():
        p, member = _member_partition(scenario, st.out_masks(t))
        if not member:
            partitions_ok = False
            witnesses.append(("PI", t, p))

    leaf_labels_ok = True
    for leaf, m in sorted(st.leaf_entering_masks().items()):
        if m and not scenario.contains_simple_mask(m):
            leaf_labels_ok = False
            witnesses.append(("LEAF", leaf, Subset(ground, m)))

    fact1 = None
    if exact:
        entering = sorted(st.leaf_entering_masks().items())
        seen = 0
        fact1 = True
        for _, m in entering:
            if m & seen:
                fact1 = False
            seen |= m
        if seen != full:
            fact1 = False

    ok = st1 and st2
    if require_exact:
        ok = ok and exact
    if require_scenario:
        ok = ok and partitions_ok and leaf_labels_ok
    return SearchTreeReport(
        st1, st2, exact, partitions_ok, leaf_labels_ok, fact1, tuple(witnesses), ok
    )


def _potential(tree, labels):
    """Lexicographic rewriting potential: total label mass, then total
    2-cycle union mass."""
    phi1 = sum(bin(m).count("1") for m in labels.values())
    phi2 = sum(
        bin(labels[(s, t)] | labels[(t, s)]).count("1") for s, t in tree.edges
    )
    return (phi1, phi2)


def _internal_rewrite(scenario, tree, labels, s, t, full):
    """One rewriting step on a non-exact 2-cycle between internal nodes.

    Tries the grow-one-block rearrangement at s (growing the s->t label)
    then at t, over candidate sets F ordered by size then value.  Among
    family-preserving candidates, the first that strictly raises the
    potential wins; failing that, the first family-preserving one.
    Returns the changed-arcs dict or raises the no-witness error.
    """
    x = labels[(s, t)]
    y = labels[(t, s)]
    pool = full & ~(x | y)
    before = _potential(tree, labels)
    fallback = None
    for f in submasks(pool, nonempty=True):
        for node, other in ((s, t), (t, s)):
            changes = {(node, other): labels[(node, other)] | f}
            for w in tree.neighbors(node):
                if w != other:
                    changes[(node, w)] = labels[(node, w)] & ~f
            parts = [
                changes.get((node, w), labels[(node, w)])
                for w in tree.neighbors(node)
            ]
            try:
                p = Partition(scenario.ground, parts)
            except ValueError:
                continue
            if not scenario.contains_partition(p):
                continue
            trial = dict(labels)
            trial.update(changes)
            if _potential(tree, trial) > before:
                return changes
            if fallback is None:
                fallback = changes
    if fallback is not None:
        return fallback
    raise NotWeaklySubmodularError(
        "no rearrangement fixes the 2-cycle between nodes %d and %d" % (s, t),
        witness=(s, t, Subset(scenario.ground, x), Subset(scenario.ground, y)),
    )


def make_exact_with_trace(scenario, st, compatible_with=None, max_steps=None):
    """Rewrite a search tree into an exact one; also return the sequence
    of potential values, one entry per applied step (starting state
    included)."""
    tree = st.tree
    if not tree.internal_nodes():
        raise ValueError("rewriting needs at least one internal node")
    report = validate_search_tree(scenario, st, require_scenario=True)
    if not report.ok:
        raise ValidationError("input is not a scenario search tree: %r"
                              % (report.witnesses,))
    ground = scenario.ground
    full = ground.full_mask
    family = None
    if compatible_with is not None:
        family = [_label_mask(ground, f) for f in compatible_with]

    def check_compatible(lbls):
        for leaf in tree.leaves():
            (nb,) = tree.neighbors(leaf)
            out = lbls[(leaf, nb)]
            if not any(fm & ~out == 0 for fm in family):
                raise ValidationError(
                    "leaf %d label contains no member of the required family"
                    % leaf
                )

    labels = dict(st.arc_labels)
    if family is not None:
        check_compatible(labels)
    scan = tree.bfs_edges(0)
    trace = [_potential(tree, labels)]
    seen_states = {tuple(sorted(labels.items()))}
    if max_steps is None:
        n = ground.size
        max_steps = (n * len(tree.arcs()) + 1) * (n * len(tree.edges) + 1) + 16

    steps = 0
    while True:
        target = None
        for u, v in scan:
            if labels[(u, v)] | labels[(v, u)] != full:
                target = (u, v)
                break
        if target is None:
            break
        steps += 1
        if steps > max_steps:
            raise ValidationError("rewriting exceeded the step bound")
        u, v = target
        if tree.degree(u) == 1 or tree.degree(v) == 1:
            leaf, other = (u, v) if tree.degree(u) == 1 else (v, u)
            labels[(leaf, other)] = full & ~labels[(other, leaf)]
        else:
            labels.update(_internal_rewrite(scenario, tree, labels, u, v, full))
        key = tuple(sorted(labels.items()))
        if key in seen_states:
            raise ValidationError("rewriting stalled: labeling repeated")
        seen_states.add(key)
        trace.append(_potential(tree, labels))

    result = SearchTree(ground, tree, labels)
    out_report = validate_search_tree(
        scenario, result, require_exact=True, require_scenario=True
    )
    if not out_report.ok:
        raise ValidationError("rewriting produced an invalid tree: %r"
                              % (out_report.witnesses,))
    if family is not None:
        check_compatible(labels)
    return result, tuple(trace)


def make_exact(scenario, st, compatible_with=None, max_steps=None):
    """Exact search tree obtained by repeated 2-cycle rewriting."""
    result, _ = make_exact_with_trace(scenario, st, compatible_with, max_steps)
    return result


def search_tree_to_tdec(scenario, st):
    """Relabel an exact scenario search tree as a tree decomposition:
    each leaf takes the label of its entering arc."""
    report = validate_search_tree(
        scenario, st, require_exact=True, require_scenario=True
    )
    if not report.ok:
        raise ValidationError(
            "not an exact scenario search tree: %r" % (report.witnesses,)
        )
    dec = TreeDec(scenario.ground, st.tree, st.leaf_entering_masks())
    out = validate_tdec(scenario, dec)
    if not out.ok:
        raise ValidationError("conversion failed validation: %r" % (out.witnesses,))
    return dec


def _far_side_labels(dec):
    return {
        (s, t): dec.side_union(s, t) for s, t in dec.tree.arcs()
    }


def tdec_to_search_tree(scenario, dec):
    """Label every arc with the union of leaf labels on its far side."""
    report = validate_tdec(scenario, dec)
    if not report.ok:
        raise ValidationError("invalid tree decomposition: %r" % (report.witnesses,))
    if dec.tree.num_nodes < 2:
        raise ValueError("a one-node decomposition has no arcs to label")
    st = SearchTree(scenario.ground, dec.tree, _far_side_labels(dec))
    out = validate_search_tree(
        scenario, st, require_exact=True, require_scenario=True
    )
    if not out.ok:
        raise ValidationError("conversion failed validation: %r" % (out.witnesses,))
    return st


def tdec_to_bdec(scenario, dec):
    """Make the tree cubic: suppress internal degree-2 nodes, then expand
    each internal node of degree four or more into a chain of degree-3
    nodes.  New edges split off whole branches, so their two-sided
    partitions coarsen the node's partition and stay in the family."""
    report = validate_tdec(scenario, dec)
    if not report.ok:
        raise ValidationError("invalid tree decomposition: %r" % (report.witnesses,))
    tree = dec.tree
    leaves = tree.leaves()
    adj = {v: set(tree.neighbors(v)) for v in range(tree.num_nodes)}

    changed = True
    while changed:
        changed = False
        for v, nbrs in list(adj.items()):
            if len(nbrs) == 2:
                a, b = sorted(nbrs, key=repr)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
                break

    counter = 0
    for v in sorted(adj, key=repr):
        nbrs = sorted(adj.get(v, ()), key=repr)
        d = len(nbrs)
        if d < 4:
            continue
        chain = [("c", counter, j) for j in range(d - 2)]
        counter += 1
        for w in nbrs:
            adj[w].discard(v)
        del adj[v]
        for c in chain:
            adj[c] = set()
        for a, b in zip(chain, chain[1:]):
            adj[a].add(b)
            adj[b].add(a)
        assign = [(chain[0], nbrs[0]), (chain[0], nbrs[1])]
        for j in range(1, d - 3):
            assign.append((chain[j], nbrs[j + 1]))
        assign.append((chain[-1], nbrs[d - 2]))
        assign.append((chain[-1], nbrs[d - 1]))
        for c, w in assign:
            adj[c].add(w)
            adj[w].add(c)

    new_tree, id_map = tree_from_adjacency(adj, keep_order=leaves)
    labels = {id_map[leaf]: dec.labels[leaf] for leaf in leaves}
    bdec = BranchDec(scenario.ground, new_tree, labels)
    out = validate_bdec(scenario, bdec)
    if not out.ok:
        raise ValidationError("conversion failed validation: %r" % (out.witnesses,))
    return bdec


def cubed_scenario(scenario):
    """The scenario whose partitions are the three-part splits all of
    whose sides split two-sidedly inside the original family."""
    bips = [p for p in scenario.partition_members() if len(p.blocks) <= 2]
    return ExplicitScenario(
        scenario.ground,
        triple_partitions(bips),
        scenario.simple_members(),
        kind_tag="explicit",
    )


def bdec_to_tdec_cubed(scenario, dec):
    """Read a branch decomposition as a tree decomposition for the
    three-part-split scenario."""
    report = validate_bdec(scenario, dec)
    if not report.ok:
        raise ValidationError("invalid branch decomposition: %r"
                              % (report.witnesses,))
    cubed = cubed_scenario(scenario)
    out_dec = TreeDec(scenario.ground, dec.tree, dict(dec.labels))
    out = validate_tdec(cubed, out_dec)
    if not out.ok:
        raise ValidationError("not a tree decomposition for the cubed family: %r"
                              % (out.witnesses,))
    return out_dec


def _simple_block_partitions(scenario):
    """Partitions of the ground set into nonempty simple blocks, in
    canonical order (each block introduced at its lowest element)."""
    full = scenario.ground.full_mask
    simples = sorted(s.mask for s in scenario.simple_members() if s.mask)

    def rec(covered, blocks):
        if covered == full:
            yield tuple(blocks)
            return
        low = (~covered & full) & -(~covered & full)
        for m in simples:
            if m & low and not m & covered:
                blocks.append(m)
                yield from rec(covered | m, blocks)
                blocks.pop()

    yield from rec(0, [])


def _leaf_assignments(blocks, shape):
    d = len(blocks)
    for perm in permutations(range(d)):
        yield {leaf: blocks[perm[leaf]] for leaf in range(d)}


def find_tdec(scenario):
    """Exhaustive search for a tree decomposition.

    Space: the one-node tree labeled by the full ground set, plus every
    partition into nonempty simple blocks placed on the leaves of every
    shape without degree-2 internal nodes.  Suppressing degree-2 nodes
    and dropping empty-labeled leaves never invalidates a decomposition,
    so this space is exhaustive.
    """
    ground = scenario.ground
    if scenario.contains_simple_mask(ground.full_mask):
        return TreeDec(ground, Tree(1, []), {0: ground.full_mask})
    for blocks in _simple_block_partitions(scenario):
        d = len(blocks)
        if d < 2:
            continue
        for shape in series_reduced_shapes(d):
            for labels in _leaf_assignments(blocks, shape):
                dec = TreeDec(ground, shape, labels)
                if validate_tdec(scenario, dec).ok:
                    return dec
    return None


def find_bdec(scenario):
    """Exhaustive search for a branch decomposition, over cubic shapes."""
    ground = scenario.ground
    if scenario.contains_simple_mask(ground.full_mask):
        return BranchDec(ground, Tree(1, []), {0: ground.full_mask})
    for blocks in _simple_block_partitions(scenario):
        d = len(blocks)
        if d < 2:
            continue
        for shape in cubic_shapes(d):
            for labels in _leaf_assignments(blocks, shape):
                dec = BranchDec(ground, shape, labels)
                if validate_bdec(scenario, dec).ok:
                    return dec
    return None


def find_exact_search_tree(scenario):
    """Exhaustive search for an exact scenario search tree.

    In an exact tree every arc label is forced to be the union of the
    leaf-entering labels behind it, so searching shapes with leaf-label
    partitions covers everything; the full-set-in-family case is the
    two-node tree with one empty back label.
    """
    ground = scenario.ground
    full = ground.full_mask
    if scenario.contains_simple_mask(full):
        st = SearchTree(ground, Tree(2, [(0, 1)]), {(0, 1): full, (1, 0): 0})
        return st
    for blocks in _simple_block_partitions(scenario):
        d = len(blocks)
        if d < 2:
            continue
        for shape in series_reduced_shapes(d):
            for labels in _leaf_assignments(blocks, shape):
                dec = TreeDec(ground, shape, labels)
                st = SearchTree(ground, shape, _far_side_labels(dec))
                report = validate_search_tree(
                    scenario, st, require_exact=True, require_scenario=True
                )
                if report.ok:
                    return st
    return None
