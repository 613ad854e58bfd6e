"""Matroids given by a rank oracle, with graphic and GF(2)-linear inputs.

Only the rank function is consulted downstream, so a matroid is a
ground set plus a cached rank oracle on bitmasks.  Two constructions
are provided: the cycle matroid of a graph (rank via component counts)
and the column matroid of a 0/1 matrix over the two-element field
(rank via elimination).  These overlap on graphs: the vertex-edge
incidence matrix of G represents the cycle matroid of G, which gives
the test suites two genuinely different rank computations to compare.
"""

from dataclasses import dataclass

from .errors import LimitExceededError, ParseError
from .gf2 import gf2_rank
from .ground import GroundSet, Subset, check_same_ground
from .partitions import Partition

__all__ = [
    "Matroid",
    "matroid_lambda",
    "partition_width_matroid",
    "RankAxiomReport",
    "check_rank_axioms",
]

MATROID_CHECK_LIMIT = 6


class Matroid:
    """A matroid as a ground set with a rank oracle."""

    __slots__ = ("ground", "kind", "_rank_fn", "_cache")

    def __init__(self, ground, rank_fn, kind="oracle"):
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_rank_fn", rank_fn)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, key, value):
        raise AttributeError("Matroid is immutable")

    @classmethod
    def graphic(cls, graph):
        """Cycle matroid of a graph; rank counts components."""
        ground = graph.edge_ground

        def rank(mask):
            return len(graph.vertices) - graph.component_count(mask)

        return cls(ground, rank, kind="graphic")

    @classmethod
    def cycle_gf2(cls, graph):
        """Cycle matroid of a graph via its GF(2) incidence matrix.

        Same matroid as :meth:`graphic`, different rank computation.
        """
        ground = graph.edge_ground
        columns = []
        for k in range(len(ground)):
            i, j = graph.endpoint_bits(k)
            columns.append((1 << i) | (1 << j))
        return cls(ground, _column_rank_fn(columns), kind="linear-gf2")

    @classmethod
    def from_matrix(cls, rows, element_names=None):
        """Column matroid of a dense 0/1 matrix over GF(2).

        Columns are the ground elements, named e0, e1, ... unless
        element_names is given.
        """
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ParseError("matrix must have at least one row and one column")
        width = len(rows[0])
        columns = [0] * width
        for ri, row in enumerate(rows):
            if len(row) != width:
                raise ParseError("ragged matrix row %d" % ri)
            for ci, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ParseError("matrix entries must be 0 or 1")
                if entry:
                    columns[ci] |= 1 << ri
        if element_names is None:
            element_names = tuple("e%d" % i for i in range(width))
        ground = GroundSet(element_names)
        if len(ground) != width:
            raise ParseError("need %d element names" % width)
        return cls(ground, _column_rank_fn(columns), kind="linear-gf2")

    def rank_mask(self, mask):
        self.ground.check_mask(mask)
        r = self._cache.get(mask)
        if r is None:
            r = self._rank_fn(mask)
            self._cache[mask] = r
        return r

    def rank(self, x):
        if isinstance(x, Subset):
            check_same_ground(x, Subset(self.ground, 0))
            return self.rank_mask(x.mask)
        return self.rank_mask(self.ground.check_mask(x))

    @property
    def full_rank(self):
        return self.rank_mask(self.ground.full_mask)

    def __repr__(self):
        return "Matroid(%r, kind=%s)" % (self.ground, self.kind)


def _column_rank_fn(columns):
    def rank(mask):
        return gf2_rank(
            columns[k] for k in range(len(columns)) if mask >> k & 1
        )

    return rank


def matroid_lambda(m, x):
    """Connectivity of a subset: r(X) + r(complement) - r(whole)."""
    mask = x.mask if isinstance(x, Subset) else m.ground.check_mask(x)
    full = m.ground.full_mask
    return m.rank_mask(mask) + m.rank_mask(full & ~mask) - m.rank_mask(full)


def partition_width_matroid(m, p):
    """Width of a partition of the matroid ground set.

    Sum of the ranks of the block complements, minus (d-1) times the
    full rank.  Canonical partitions carry no empty blocks, so the
    value is unchanged by empty-block insertion in the input.
    """
    if not isinstance(p, Partition) or p.ground != m.ground:
        raise ValueError("expected a partition of the ground set of %r" % m)
    full = m.ground.full_mask
    d = len(p.blocks)
    return sum(m.rank_mask(full & ~b) for b in p.blocks) - (d - 1) * m.full_rank


@dataclass(frozen=True)
class RankAxiomReport:
    zero_empty: bool
    unit_increase: bool
    monotone: bool
    submodular: bool
    bounded: bool
    witnesses: tuple

    @property
    def ok(self):
        return (
            self.zero_empty
            and self.unit_increase
            and self.monotone
            and self.submodular
            and self.bounded
        )


def check_rank_axioms(m, limit=MATROID_CHECK_LIMIT):
    """Exhaustively verify the rank axioms on a small ground set."""
    n = len(m.ground)
    if n > limit:
        raise LimitExceededError(
            "rank axiom check is exhaustive; ground has %d > %d elements" % (n, limit)
        )
    full = m.ground.full_mask
    witnesses = []
    zero_empty = m.rank_mask(0) == 0
    if not zero_empty:
        witnesses.append(("zero_empty", 0, m.rank_mask(0)))
    bounded = True
    unit = True
    monotone = True
    for mask in range(full + 1):
        r = m.rank_mask(mask)
        if not 0 <= r <= bin(mask).count("1"):
            bounded = False
            witnesses.append(("bounded", mask, r))
        for e in range(n):
            if mask >> e & 1:
                continue
            bigger = m.rank_mask(mask | (1 << e))
            if bigger < r:
                monotone = False
                witnesses.append(("monotone", mask, e))
            if bigger > r + 1:
                unit = False
                witnesses.append(("unit_increase", mask, e))
    submodular = True
    for x in range(full + 1):
        for y in range(x, full + 1):
            if m.rank_mask(x) + m.rank_mask(y) < m.rank_mask(x | y) + m.rank_mask(x & y):
                submodular = False
                witnesses.append(("submodular", x, y))
    return RankAxiomReport(
        zero_empty, unit, monotone, submodular, bounded, tuple(witnesses)
    )
