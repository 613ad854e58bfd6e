"""Finite simple undirected graphs and their cut measures.

A graph carries two ground sets: its vertices and (when it has any) its
edges, named ``u|v`` after the endpoints.  Partitions of the edge set
feed the boundary machinery; subsets of the vertex set feed cut-rank
and carving cuts.

The enumeration helpers generate the small-graph corpora used by the
verification suites: either all labeled edge subsets of a complete
graph, or one representative per isomorphism class.
"""

import itertools

from .errors import LimitExceededError, ParseError
from .gf2 import gf2_rank
from .ground import GroundSet, Subset, check_same_ground
from .partitions import Partition

__all__ = [
    "Graph",
    "boundary",
    "delta",
    "cut_rank",
    "carving_cut",
    "graphic_rank",
    "enumerate_small_graphs",
    "enumerate_vertex_graphs",
]

EDGE_SEP = "|"

GRAPH_EDGE_LIMIT = 6
GRAPH_VERTEX_LIMIT = 6


def _letters(n):
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple("v%d" % i for i in range(n))


class Graph:
    """A simple undirected graph over named vertices.

    Loops and parallel edges are rejected.  Vertex names must not
    contain the edge-name separator ``|``.
    """

    __slots__ = ("vertices", "edges", "_pairs", "_edge_ground", "_incident", "_adj")

    def __init__(self, vertex_names, edge_pairs):
        vg = GroundSet(vertex_names)
        for name in vg.names:
            if EDGE_SEP in name:
                raise ValueError("vertex name may not contain %r: %r" % (EDGE_SEP, name))
        pairs = []
        seen = set()
        for u, v in edge_pairs:
            iu, iv = vg.bit(str(u)), vg.bit(str(v))
            if iu == iv:
                raise ValueError("loop at %r" % (u,))
            if iu > iv:
                iu, iv = iv, iu
            if (iu, iv) in seen:
                raise ValueError("parallel edge %s%s%s" % (vg.names[iu], EDGE_SEP, vg.names[iv]))
            seen.add((iu, iv))
            pairs.append((iu, iv))
        pairs.sort()
        pairs = tuple(pairs)
        names = vg.names
        edge_names = tuple(names[i] + EDGE_SEP + names[j] for i, j in pairs)
        object.__setattr__(self, "vertices", vg)
        object.__setattr__(self, "edges", tuple((names[i], names[j]) for i, j in pairs))
        object.__setattr__(self, "_pairs", pairs)
        object.__setattr__(self, "_edge_ground", GroundSet(edge_names) if pairs else None)
        incident = [0] * len(names)
        adj = [0] * len(names)
        for k, (i, j) in enumerate(pairs):
            incident[i] |= 1 << k
            incident[j] |= 1 << k
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "_incident", tuple(incident))
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable")

    # construction helpers

    @classmethod
    def complete(cls, names):
        names = tuple(names)
        return cls(names, itertools.combinations(names, 2))

    @classmethod
    def path(cls, names):
        names = tuple(names)
        return cls(names, zip(names, names[1:]))

    @classmethod
    def cycle(cls, names):
        names = tuple(names)
        if len(names) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(names, zip(names, names[1:] + names[:1]))

    @classmethod
    def from_edge_list(cls, text):
        """Parse edge-list text: one ``u v`` pair per line.

        A line with a single token declares an isolated vertex.  Blank
        lines and ``#`` comments are skipped.
        """
        vertices = []
        seen = set()
        edges = []

        def note(name):
            if name not in seen:
                seen.add(name)
                vertices.append(name)

        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) == 1:
                note(tokens[0])
            elif len(tokens) == 2:
                note(tokens[0])
                note(tokens[1])
                edges.append((tokens[0], tokens[1]))
            else:
                raise ParseError("line %d: expected 1 or 2 tokens, got %d" % (lineno, len(tokens)))
        try:
            return cls(vertices, edges)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_json_obj(cls, obj):
        try:
            return cls(obj["vertices"], [tuple(e) for e in obj["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad graph object: %s" % exc) from None

    def to_json_obj(self):
        return {"vertices": list(self.vertices.names), "edges": [list(e) for e in self.edges]}

    # basic accessors

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def edge_count(self):
        return len(self._pairs)

    @property
    def edge_ground(self):
        if self._edge_ground is None:
            raise ValueError("graph has no edges")
        return self._edge_ground

    def edge_name(self, u, v):
        iu, iv = self.vertices.bit(u), self.vertices.bit(v)
        if iu > iv:
            iu, iv = iv, iu
        name = self.vertices.names[iu] + EDGE_SEP + self.vertices.names[iv]
        if self._edge_ground is None or name not in self._edge_ground:
            raise KeyError("no edge %s" % name)
        return name

    def endpoints(self, edge_name):
        k = self.edge_ground.bit(edge_name)
        i, j = self._pairs[k]
        return (self.vertices.names[i], self.vertices.names[j])

    def endpoint_bits(self, edge_bit):
        return self._pairs[edge_bit]

    def neighbors(self, v):
        m = self._adj[self.vertices.bit(v)]
        return self.vertices.names_of(m)

    def degree(self, v):
        return bin(self._incident[self.vertices.bit(v)]).count("1")

    def incident_mask(self, v):
        """Edge-ground mask of the edges at a vertex."""
        return self._incident[self.vertices.bit(v)]

    def adjacency_mask(self, v):
        """Vertex-ground mask of the neighbours of a vertex."""
        return self._adj[self.vertices.bit(v)]

    def edge_subset(self, pairs):
        return Subset(self.edge_ground, self.edge_ground.mask_of(
            self.edge_name(u, v) for u, v in pairs
        ))

    def component_count(self, edge_mask=None):
        """Number of components of (V, F), isolated vertices included."""
        n = len(self.vertices)
        if edge_mask is None:
            edge_mask = (1 << len(self._pairs)) - 1
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = n
        for k, (i, j) in enumerate(self._pairs):
            if edge_mask >> k & 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
                    count -= 1
        return count

    @property
    def is_connected(self):
        return self.component_count() == 1

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self._pairs == other._pairs
        )

    def __hash__(self):
        return hash((self.vertices, self._pairs))

    def __repr__(self):
        return "Graph(%d vertices, %d edges)" % (len(self.vertices), len(self._pairs))


def _edge_mask(g, x):
    if isinstance(x, Subset):
        check_same_ground(x, Subset(g.edge_ground, 0))
        return x.mask
    return g.edge_ground.check_mask(x)


def _vertex_mask(g, x):
    if isinstance(x, Subset):
        check_same_ground(x, Subset(g.vertices, 0))
        return x.mask
    return g.vertices.check_mask(x)


def boundary(g, p):
    """Vertices incident with edges from two distinct blocks of p.

    p partitions the edge ground of g.
    """
    if not isinstance(p, Partition) or p.ground != g.edge_ground:
        raise ValueError("expected a partition of the edge set of %r" % g)
    out = 0
    for vi in range(len(g.vertices)):
        inc = g._incident[vi]
        hits = 0
        for block in p.blocks:
            if block & inc:
                hits += 1
                if hits == 2:
                    out |= 1 << vi
                    break
    return Subset(g.vertices, out)


def boundary_size_of_blocks(g, blocks):
    """|boundary| computed straight from an iterable of edge masks."""
    size = 0
    blocks = tuple(blocks)
    for vi in range(len(g.vertices)):
        inc = g._incident[vi]
        hits = 0
        for block in blocks:
            if block & inc:
                hits += 1
                if hits == 2:
                    size += 1
                    break
    return size


def delta(g, x):
    """Boundary size of the bipartition {x, complement}, on edge sets."""
    mask = _edge_mask(g, x)
    full = g.edge_ground.full_mask
    blocks = [m for m in (mask, full & ~mask) if m]
    return boundary_size_of_blocks(g, blocks)


def cut_rank(g, x):
    """GF(2) rank of the adjacency matrix between x and its complement.

    x is a set of vertices.
    """
    mask = _vertex_mask(g, x)
    comp = g.vertices.full_mask & ~mask
    rows = []
    for vi in range(len(g.vertices)):
        if mask >> vi & 1:
            rows.append(g._adj[vi] & comp)
    return gf2_rank(rows)


def carving_cut(g, x):
    """Number of edges with exactly one endpoint in the vertex set x."""
    mask = _vertex_mask(g, x)
    count = 0
    for i, j in g._pairs:
        if (mask >> i & 1) != (mask >> j & 1):
            count += 1
    return count


def graphic_rank(g, f):
    """Cycle-matroid rank of an edge set: |V| minus components of (V, F)."""
    mask = _edge_mask(g, f)
    return len(g.vertices) - g.component_count(mask)


# enumeration of small graphs

def _canonical_key(n, pairs):
    """Lexicographically least relabeling of the edge list.

    Candidate relabelings are restricted to those matching a
    degree-refined vertex signature, which every isomorphism respects.
    """
    adj = [[] for _ in range(n)]
    deg = [0] * n
    for i, j in pairs:
        deg[i] += 1
        deg[j] += 1
        adj[i].append(j)
        adj[j].append(i)
    sig = [(deg[v], tuple(sorted(deg[w] for w in adj[v]))) for v in range(n)]
    classes = {}
    for v in range(n):
        classes.setdefault(sig[v], []).append(v)
    ordered = [classes[s] for s in sorted(classes)]
    starts = []
    base = 0
    for cl in ordered:
        starts.append(base)
        base += len(cl)
    best = None
    for perms in itertools.product(*(itertools.permutations(cl) for cl in ordered)):
        relabel = [0] * n
        for cl_idx, perm in enumerate(perms):
            for offset, v in enumerate(perm):
                relabel[v] = starts[cl_idx] + offset
        edges = sorted(
            (relabel[i], relabel[j]) if relabel[i] < relabel[j] else (relabel[j], relabel[i])
            for i, j in pairs
        )
        key = tuple(edges)
        if best is None or key < best:
            best = key
    return (n, best)


def _connected_classes(max_edges):
    """Canonical edge lists of connected graphs with 1..max_edges edges.

    Vertex sets are exactly the edge endpoints, so a connected graph
    with m edges has between 2 and m+1 vertices.
    """
    out = []
    seen = set()
    for m in range(1, max_edges + 1):
        for n in range(2, m + 2):
            if m > n * (n - 1) // 2:
                continue
            all_pairs = list(itertools.combinations(range(n), 2))
            for combo in itertools.combinations(all_pairs, m):
                cover = 0
                for i, j in combo:
                    cover |= (1 << i) | (1 << j)
                if cover != (1 << n) - 1:
                    continue
                parent = list(range(n))

                def find(a):
                    while parent[a] != a:
                        parent[a] = parent[parent[a]]
                        a = parent[a]
                    return a

                comps = n
                for i, j in combo:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
                        comps -= 1
                if comps != 1:
                    continue
                key = _canonical_key(n, combo)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


def _graph_from_components(parts):
    """Assemble one Graph from component canonical keys, labels a, b, ..."""
    total = sum(n for n, _ in parts)
    names = _letters(total)
    edges = []
    base = 0
    for n, pairs in parts:
        for i, j in pairs:
            edges.append((names[base + i], names[base + j]))
        base += n
    return Graph(names, edges)


def enumerate_small_graphs(max_edges, max_vertices=None, connected=False, dedup=True):
    """Generate the graphs with at most max_edges edges and no isolated vertices.

    With ``dedup`` (the default), yields one representative per
    isomorphism class, assembled from canonical connected components.
    Without it, yields every nonempty edge subset of the complete graph
    on ``max_vertices`` labeled vertices (default 2 * max_edges, capped
    at 6), restricted to the endpoints actually used.
    """
    if max_edges < 1 or max_edges > GRAPH_EDGE_LIMIT:
        raise LimitExceededError("max_edges must be in 1..%d" % GRAPH_EDGE_LIMIT)
    if dedup:
        classes = _connected_classes(max_edges)
        if connected:
            for key in classes:
                yield _graph_from_components([key])
            return
        # multisets of connected classes, total edge count bounded
        def rec(start, budget, chosen):
            if chosen:
                yield _graph_from_components(chosen)
            for idx in range(start, len(classes)):
                n, pairs = classes[idx]
                m = len(pairs)
                if m <= budget:
                    yield from rec(idx, budget - m, chosen + [classes[idx]])

        yield from rec(0, max_edges, [])
        return
    if max_vertices is None:
        max_vertices = min(2 * max_edges, 6)
    if max_vertices < 2 or max_vertices > 2 * GRAPH_EDGE_LIMIT:
        raise LimitExceededError("max_vertices must be in 2..%d" % (2 * GRAPH_EDGE_LIMIT))
    names = _letters(max_vertices)
    all_pairs = list(itertools.combinations(names, 2))
    for m in range(1, max_edges + 1):
        if m > len(all_pairs):
            break
        for combo in itertools.combinations(all_pairs, m):
            used = []
            seen = set()
            for u, v in combo:
                for name in (u, v):
                    if name not in seen:
                        seen.add(name)
                        used.append(name)
            g = Graph(sorted(used, key=names.index), combo)
            if connected and not g.is_connected:
                continue
            yield g


def enumerate_vertex_graphs(num_vertices, dedup=True):
    """All simple graphs on a fixed vertex set a, b, ... (edgeless included).

    These back the vertex-ground corpora (cut-rank, carving cuts),
    where isolated vertices are genuine ground elements.
    """
    if num_vertices < 1 or num_vertices > GRAPH_VERTEX_LIMIT:
        raise LimitExceededError("num_vertices must be in 1..%d" % GRAPH_VERTEX_LIMIT)
    names = _letters(num_vertices)
    all_pairs = list(itertools.combinations(range(num_vertices), 2))
    seen = set()
    for bits in range(1 << len(all_pairs)):
        combo = tuple(p for k, p in enumerate(all_pairs) if bits >> k & 1)
        if dedup:
            key = _canonical_key(num_vertices, combo)
            if key in seen:
                continue
            seen.add(key)
        yield Graph(names, ((names[i], names[j]) for i, j in combo))
