"""Symmetric submodular set functions and the partition families they induce.

A connectivity function assigns an integer to every subset of a ground
set, symmetrically under complement and submodularly under union and
intersection.  Registered instances are additionally normalized to
vanish on the empty set, so dropping empty blocks from a partition
never changes a block-wise sum.

From a connectivity function f and a level k two partition families
arise: the partitions whose block values sum to at most k, and the
bipartitions whose side value is at most k.  Paired with the
singletons-plus-empty capture family they form the scenarios behind
the branch-width and function-tree-width sweeps.
"""

from dataclasses import dataclass

from .errors import LimitExceededError
from .graphs import carving_cut, cut_rank, delta
from .ground import Subset, check_same_ground
from .matroids import matroid_lambda
from .scenario import Scenario

__all__ = [
    "ConnectivityFn",
    "ConnectivityReport",
    "check_connectivity_axioms",
    "delta_fn",
    "cut_rank_fn",
    "carving_fn",
    "lambda_fn",
    "max_on_singletons",
    "part_f_k",
    "q_f_k",
    "is_unit_or_empty",
    "part_f_scenario",
    "q_f_scenario",
]

CONNECTIVITY_CHECK_LIMIT = 6


class ConnectivityFn:
    """An integer set function with a name, evaluated through a cache."""

    __slots__ = ("ground", "name", "_fn", "_cache")

    def __init__(self, ground, fn, name):
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_fn", fn)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, key, value):
        raise AttributeError("ConnectivityFn is immutable")

    def value_mask(self, mask):
        self.ground.check_mask(mask)
        v = self._cache.get(mask)
        if v is None:
            v = self._fn(mask)
            self._cache[mask] = v
        return v

    def __call__(self, x):
        if isinstance(x, Subset):
            check_same_ground(x, Subset(self.ground, 0))
            return self.value_mask(x.mask)
        return self.value_mask(self.ground.check_mask(x))

    def __repr__(self):
        return "ConnectivityFn(%s on %r)" % (self.name, self.ground)


@dataclass(frozen=True)
class ConnectivityReport:
    symmetric: bool
    submodular: bool
    zero_empty: bool
    witnesses: tuple

    @property
    def ok(self):
        return self.symmetric and self.submodular and self.zero_empty


def check_connectivity_axioms(f, limit=CONNECTIVITY_CHECK_LIMIT):
    """Exhaustively verify symmetry, submodularity and emptiness zero."""
    n = len(f.ground)
    if n > limit:
        raise LimitExceededError(
            "connectivity axiom check is exhaustive; ground has %d > %d elements"
            % (n, limit)
        )
    full = f.ground.full_mask
    witnesses = []
    zero_empty = f.value_mask(0) == 0
    if not zero_empty:
        witnesses.append(("zero_empty", 0))
    symmetric = True
    for mask in range(full + 1):
        if f.value_mask(mask) != f.value_mask(full & ~mask):
            symmetric = False
            witnesses.append(("symmetry", mask))
    submodular = True
    for x in range(full + 1):
        for y in range(x, full + 1):
            if f.value_mask(x) + f.value_mask(y) < f.value_mask(x | y) + f.value_mask(x & y):
                submodular = False
                witnesses.append(("submodularity", x, y))
    return ConnectivityReport(symmetric, submodular, zero_empty, tuple(witnesses))


def delta_fn(graph):
    """Boundary size of an edge bipartition, on the edge ground."""
    return ConnectivityFn(graph.edge_ground, lambda m: delta(graph, m), "delta")


def cut_rank_fn(graph):
    """GF(2) biadjacency rank of a vertex bipartition, on the vertex ground."""
    return ConnectivityFn(graph.vertices, lambda m: cut_rank(graph, m), "cutrank")


def carving_fn(graph):
    """Crossing-edge count of a vertex bipartition, on the vertex ground."""
    return ConnectivityFn(graph.vertices, lambda m: carving_cut(graph, m), "carving")


def lambda_fn(matroid):
    """Matroid connectivity, on the matroid ground."""
    return ConnectivityFn(
        matroid.ground, lambda m: matroid_lambda(matroid, m), "lambda"
    )


def max_on_singletons(f):
    """Largest value of f on a single element; 0 on a wide range of grounds.

    This is the level where the singletons-plus-empty capture family
    starts satisfying the bipartition axiom for the q family.
    """
    return max(f.value_mask(1 << i) for i in range(len(f.ground)))


def part_f_k(f, k):
    """Membership predicate: block values of the partition sum to at most k."""

    def member(p):
        return sum(f.value_mask(b) for b in p.blocks) <= k

    return member


def q_f_k(f, k):
    """Membership predicate: a bipartition whose side value is at most k.

    The one-block partition counts as the bipartition with an empty
    side, which has value 0.
    """

    def member(p):
        if len(p.blocks) == 1:
            return 0 <= k
        if len(p.blocks) == 2:
            return f.value_mask(p.blocks[0]) <= k
        return False

    return member


def is_unit_or_empty(s):
    return len(s) <= 1


def part_f_scenario(f, k):
    """Scenario of sum-bounded partitions with singleton captures."""
    return Scenario(
        f.ground, part_f_k(f, k), is_unit_or_empty,
        kind_tag="part_%s^%d" % (f.name, k),
    )


def q_f_scenario(f, k):
    """Scenario of value-bounded bipartitions with singleton captures."""
    return Scenario(
        f.ground, q_f_k(f, k), is_unit_or_empty,
        kind_tag="q_%s^%d" % (f.name, k),
    )
