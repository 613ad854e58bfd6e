"""Rank of a set of GF(2) vectors stored as integer bitmasks."""

__all__ = ["gf2_rank"]


def gf2_rank(vectors):
    """Rank over the two-element field.

    Each vector is an int whose bits are the coordinates.  Runs a plain
    elimination: keep one pivot row per leading bit.
    """
    pivots = []
    for v in vectors:
        for p in pivots:
            v = min(v, v ^ p)
        if v:
            pivots.append(v)
            pivots.sort(reverse=True)
    return len(pivots)
