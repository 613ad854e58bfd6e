"""Partitions of a ground set and the coarsening lattice.

A partition is stored as a canonical tuple of block masks: empty blocks
dropped, blocks sorted by smallest element.  Coarsening, common
coarsening (the lattice join) and the block rearrangement that grows one
block by a set F while cutting F out of all others are the primitives
the rest of the package is built on.
"""

import re
from itertools import combinations, product

from . import _kernel as kernel
from .errors import LimitExceededError, ParseError
from .ground import Subset, check_same_ground

__all__ = [
    "Partition",
    "is_coarser",
    "common_coarsening",
    "redirect",
    "enumerate_partitions",
    "triple_partitions",
    "submasks",
]

ENUMERATION_LIMIT = 10


class Partition:
    """A partition of the full ground set into nonempty blocks."""

    __slots__ = ("ground", "blocks")

    def __init__(self, ground, block_masks):
        blocks = kernel.canonicalize(block_masks)
        if not kernel.is_partition_of(blocks, ground.full_mask):
            raise ValueError(
                "blocks do not partition the ground set: %r"
                % [ground.names_of(b & ground.full_mask) for b in block_masks]
            )
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, key, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_subsets(cls, subsets):
        subsets = tuple(subsets)
        if not subsets:
            raise ValueError("no blocks given")
        ground = subsets[0].ground
        for s in subsets[1:]:
            check_same_ground(subsets[0], s)
        return cls(ground, (s.mask for s in subsets))

    @classmethod
    def from_names(cls, ground, name_groups):
        return cls(ground, (ground.mask_of(g) for g in name_groups))

    @classmethod
    def parse(cls, ground, text):
        """Parse ``{a,b}{c}{d,e}`` notation."""
        body = text.strip()
        groups = re.findall(r"\{([^{}]*)\}", body)
        if re.sub(r"\{[^{}]*\}", "", body).strip():
            raise ParseError("malformed partition text: %r" % text)
        masks = []
        for g in groups:
            g = g.strip()
            if not g:
                masks.append(0)
                continue
            try:
                masks.append(ground.mask_of(p.strip() for p in g.split(",")))
            except KeyError as exc:
                raise ParseError(str(exc)) from None
        try:
            return cls(ground, masks)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def indiscrete(cls, ground):
        """The one-block partition of the ground set."""
        return cls(ground, (ground.full_mask,))

    @classmethod
    def discrete(cls, ground):
        """The all-singletons partition."""
        return cls(ground, (1 << i for i in range(ground.size)))

    def subsets(self):
        return tuple(Subset(self.ground, b) for b in self.blocks)

    def block_of(self, name):
        """The block containing a named element, as a Subset."""
        b = kernel.block_containing(self.blocks, 1 << self.ground.bit(name))
        return Subset(self.ground, b)

    def is_coarser_than(self, other):
        check_same_ground(self, other)
        return kernel.is_coarser(self.blocks, other.blocks)

    def join(self, other):
        check_same_ground(self, other)
        return Partition(self.ground, kernel.join(self.blocks, other.blocks))

    def redirect(self, x, f):
        """Grow block x by f and cut f out of every other block."""
        x_mask = x.mask if isinstance(x, Subset) else x
        f_mask = f.mask if isinstance(f, Subset) else f
        try:
            i = self.blocks.index(x_mask)
        except ValueError:
            raise ValueError(
                "%r is not a block of %r" % (self.ground.names_of(x_mask), self)
            ) from None
        return Partition(self.ground, kernel.redirect(self.blocks, i, f_mask))

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.ground == other.ground
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.ground, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.subsets())

    def __str__(self):
        return "".join("{%s}" % ",".join(self.ground.names_of(b)) for b in self.blocks)

    def __repr__(self):
        return str(self)


def is_coarser(p1, p2):
    """True iff every block of p2 lies inside some block of p1."""
    return p1.is_coarser_than(p2)


def common_coarsening(p1, p2):
    """The finest partition coarser than both p1 and p2."""
    return p1.join(p2)


def redirect(p, x, f):
    return p.redirect(x, f)


def submasks(mask, nonempty=False):
    """Submasks of mask ordered by increasing size, then numeric value.

    The fixed order makes every search that picks "the first working
    subset" deterministic.
    """
    bits = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    for r in range(1 if nonempty else 0, len(bits) + 1):
        level = []
        for combo in combinations(bits, r):
            m = 0
            for b in combo:
                m |= b
            level.append(m)
        level.sort()
        yield from level


def enumerate_partitions(ground, limit=ENUMERATION_LIMIT):
    """Yield every partition of the ground set once, in canonical form.

    Uses restricted-growth assignments, so the count is the Bell number
    of the ground size.
    """
    n = ground.size
    if n > limit:
        raise LimitExceededError(
            "ground size %d exceeds enumeration limit %d" % (n, limit)
        )
    assign = [0] * n

    def rec(i, nblocks):
        if i == n:
            blocks = [0] * nblocks
            for j in range(n):
                blocks[assign[j]] |= 1 << j
            yield Partition(ground, blocks)
            return
        for v in range(nblocks + 1):
            assign[i] = v
            yield from rec(i + 1, max(nblocks, v + 1))

    yield from rec(0, 0)


def triple_partitions(bipartitions):
    """All partitions {X,Y,Z} with X,Y,Z disjoint covering the ground set
    such that each of the three two-sided splits {X,X^c}, {Y,Y^c},
    {Z,Z^c} appears in the given collection.

    Parts may be empty before canonicalization, so the result can contain
    one- and two-block partitions.
    """
    bips = set()
    ground = None
    first = None
    for p in bipartitions:
        if first is None:
            first = p
            ground = p.ground
        else:
            check_same_ground(first, p)
        if len(p.blocks) > 2:
            raise ValueError("not a two-sided split: %r" % p)
        bips.add(p.blocks)
    if ground is None:
        return set()
    full = ground.full_mask

    def split(x):
        return kernel.canonicalize((x, full & ~x))

    out = set()
    for assign in product(range(3), repeat=ground.size):
        parts = [0, 0, 0]
        for j, g in enumerate(assign):
            parts[g] |= 1 << j
        if all(split(x) in bips for x in parts):
            out.add(Partition(ground, parts))
    return out
