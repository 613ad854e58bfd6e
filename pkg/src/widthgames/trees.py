"""Finite trees with integer nodes, plus labeled-leaf shape enumerators.

Nodes are 0..n-1.  A leaf is a node of degree at most one, so the
one-node tree consists of a single leaf.  Shape enumerators follow the
convention that nodes 0..d-1 are the leaves and higher ids are internal.
"""

from itertools import combinations

__all__ = [
    "Tree",
    "cubic_shapes",
    "series_reduced_shapes",
]


class Tree:
    """An unrooted tree on nodes 0..num_nodes-1."""

    __slots__ = ("num_nodes", "edges", "adjacency", "_sides")

    def __init__(self, num_nodes, edges):
        if num_nodes < 1:
            raise ValueError("a tree has at least one node")
        canon = []
        seen = set()
        adj = [[] for _ in range(num_nodes)]
        for u, v in edges:
            if not (0 <= u < num_nodes and 0 <= v < num_nodes) or u == v:
                raise ValueError("bad edge (%r, %r)" % (u, v))
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError("duplicate edge %r" % (e,))
            seen.add(e)
            canon.append(e)
            adj[u].append(v)
            adj[v].append(u)
        if len(canon) != num_nodes - 1:
            raise ValueError("a tree on %d nodes has %d edges" % (
                num_nodes, num_nodes - 1))
        reached = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in reached:
                    reached.add(v)
                    stack.append(v)
        if len(reached) != num_nodes:
            raise ValueError("edges do not connect all nodes")
        object.__setattr__(self, "num_nodes", num_nodes)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_sides", {})

    def __setattr__(self, key, value):
        raise AttributeError("Tree is immutable")

    def degree(self, v):
        return len(self.adjacency[v])

    def neighbors(self, v):
        return self.adjacency[v]

    def leaves(self):
        return tuple(v for v in range(self.num_nodes) if self.degree(v) <= 1)

    def internal_nodes(self):
        return tuple(v for v in range(self.num_nodes) if self.degree(v) >= 2)

    def is_cubic(self):
        return all(self.degree(v) == 3 for v in self.internal_nodes())

    def arcs(self):
        """Both directions of every edge."""
        out = []
        for u, v in self.edges:
            out.append((u, v))
            out.append((v, u))
        return tuple(out)

    def side(self, s, t):
        """Nodes on t's side of the edge {s,t}, including t."""
        key = (s, t)
        cached = self._sides.get(key)
        if cached is not None:
            return cached
        if t not in self.adjacency[s]:
            raise ValueError("(%d, %d) is not an edge" % (s, t))
        reached = {t}
        stack = [t]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w != s and w not in reached:
                    reached.add(w)
                    stack.append(w)
        result = frozenset(reached)
        self._sides[key] = result
        return result

    def bfs_edges(self, root=0):
        """Edges in breadth-first discovery order from root."""
        order = []
        seen = {root}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    order.append((u, v))
                    queue.append(v)
        return tuple(order)

    def __eq__(self, other):
        return (
            isinstance(other, Tree)
            and self.num_nodes == other.num_nodes
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.num_nodes, self.edges))

    def __repr__(self):
        return "Tree(%d, %r)" % (self.num_nodes, list(self.edges))


def tree_from_adjacency(adj, keep_order):
    """Build a Tree from an adjacency dict over arbitrary hashable ids.

    keep_order lists the ids that must map to 0..len(keep_order)-1 in
    order; remaining ids are appended in sorted-repr order.  Returns
    (tree, id_map).
    """
    rest = sorted((x for x in adj if x not in set(keep_order)), key=repr)
    id_map = {}
    for i, x in enumerate(list(keep_order) + rest):
        id_map[x] = i
    edges = set()
    for u, nbrs in adj.items():
        for v in nbrs:
            edges.add((min(id_map[u], id_map[v]), max(id_map[u], id_map[v])))
    return Tree(len(id_map), sorted(edges)), id_map


def cubic_shapes(num_leaves):
    """All leaf-labeled cubic shapes: internal nodes have degree exactly 3.

    Leaves are nodes 0..num_leaves-1.  Built by repeated edge
    subdivision, which hits every shape exactly once, (2d-5)!! in total
    for d >= 3 leaves.
    """
    d = num_leaves
    if d < 1:
        raise ValueError("need at least one leaf")
    if d == 1:
        yield Tree(1, [])
        return
    if d == 2:
        yield Tree(2, [(0, 1)])
        return

    def grow(edge_lists, next_leaf):
        if next_leaf == d:
            yield from edge_lists
            return
        new_internal = d + (next_leaf - 2)
        grown = []
        for edges in edge_lists:
            for i, (a, b) in enumerate(edges):
                out = edges[:i] + edges[i + 1:]
                out = out + [(a, new_internal), (new_internal, b),
                             (next_leaf, new_internal)]
                grown.append(out)
        yield from grow(grown, next_leaf + 1)

    base = [[(0, d), (1, d), (2, d)]]
    for edges in grow(base, 3):
        yield Tree(d + (d - 2), edges)


def _contract(tree, internal_edges):
    """Contract a set of internal edges; returns adjacency over class
    representatives, leaf ids unchanged."""
    parent = list(range(tree.num_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in internal_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    adj = {}
    for u, v in tree.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        adj.setdefault(ru, set()).add(rv)
        adj.setdefault(rv, set()).add(ru)
    if not adj:
        adj = {find(0): set()}
    return adj


def _split_key(tree, num_leaves):
    """Canonical key: the set of leaf bipartitions its edges induce."""
    full = (1 << num_leaves) - 1
    key = set()
    for u, v in tree.edges:
        m = 0
        for x in tree.side(u, v):
            if x < num_leaves:
                m |= 1 << x
        key.add(min(m, full & ~m))
    return frozenset(key)


def series_reduced_shapes(num_leaves):
    """All leaf-labeled shapes whose internal nodes have degree >= 3.

    Every such shape arises from a cubic shape by contracting internal
    edges, so enumerate those and deduplicate by induced leaf splits.
    """
    d = num_leaves
    if d <= 2:
        yield from cubic_shapes(d)
        return
    seen = set()
    for cubic in cubic_shapes(d):
        internal = [
            (u, v) for u, v in cubic.edges if u >= d and v >= d
        ]
        for r in range(len(internal) + 1):
            for chosen in combinations(internal, r):
                adj = _contract(cubic, chosen)
                tree, _ = tree_from_adjacency(adj, keep_order=range(d))
                key = _split_key(tree, d)
                if key in seen:
                    continue
                seen.add(key)
                yield tree
