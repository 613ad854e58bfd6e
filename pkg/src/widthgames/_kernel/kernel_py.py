"""Bitmask primitives for canonical partitions, pure Python backend.

A block is an int bitmask over ground elements 0..n-1. A canonical
partition is a tuple of pairwise disjoint nonzero masks sorted by lowest
set bit. All functions here assume well-formed inputs; validation lives
in the Partition layer.
"""

__all__ = [
    "canonicalize",
    "is_partition_of",
    "is_coarser",
    "join",
    "redirect",
    "block_containing",
]


def canonicalize(blocks):
    """Drop empty blocks and sort by lowest set bit."""
    return tuple(sorted((b for b in blocks if b), key=lambda b: b & -b))


def is_partition_of(blocks, full):
    """True iff blocks are pairwise disjoint with union equal to full."""
    seen = 0
    for b in blocks:
        if b & seen:
            return False
        seen |= b
    return seen == full


def is_coarser(coarse, fine):
    """True iff every block of fine lies inside some block of coarse."""
    for b in fine:
        low = b & -b
        for c in coarse:
            if c & low:
                if b & ~c:
                    return False
                break
        else:
            return False
    return True


def join(p1, p2):
    """Finest partition coarser than both p1 and p2.

    Blocks of p1 stay pairwise disjoint while merging, so one pass per
    p2-block suffices.
    """
    groups = list(p1)
    for q in p2:
        merged = q
        rest = []
        for b in groups:
            if b & merged:
                merged |= b
            else:
                rest.append(b)
        rest.append(merged)
        groups = rest
    return canonicalize(groups)


def redirect(blocks, i, f):
    """Grow block i by f, cut f out of every other block, canonicalize."""
    out = []
    for j, b in enumerate(blocks):
        out.append(b | f if j == i else b & ~f)
    return canonicalize(out)


def block_containing(blocks, mask):
    """The block meeting mask's lowest bit, or 0 if none does."""
    low = mask & -mask
    for b in blocks:
        if b & low:
            return b
    return 0
