# cython: language_level=3, boundscheck=False, wraparound=False
"""Bitmask primitives for canonical partitions, compiled backend.

Mirrors kernel_py exactly; masks must fit in 64 bits, which the ground
size limit guarantees.
"""

__all__ = [
    "canonicalize",
    "is_partition_of",
    "is_coarser",
    "join",
    "redirect",
    "block_containing",
]

cdef inline unsigned long long _low(unsigned long long b):
    return b & (~b + 1)


def canonicalize(blocks):
    cdef list out = [b for b in blocks if b]
    out.sort(key=_sort_key)
    return tuple(out)


def _sort_key(b):
    return b & -b


def is_partition_of(blocks, full):
    cdef unsigned long long seen = 0
    cdef unsigned long long b
    for x in blocks:
        b = x
        if b & seen:
            return False
        seen |= b
    return seen == <unsigned long long> full


def is_coarser(coarse, fine):
    cdef unsigned long long b, c, low
    cdef bint found
    for x in fine:
        b = x
        low = _low(b)
        found = False
        for y in coarse:
            c = y
            if c & low:
                if b & ~c:
                    return False
                found = True
                break
        if not found:
            return False
    return True


def join(p1, p2):
    cdef list groups = list(p1)
    cdef list rest
    cdef unsigned long long merged, b
    for q in p2:
        merged = q
        rest = []
        for x in groups:
            b = x
            if b & merged:
                merged |= b
            else:
                rest.append(x)
        rest.append(merged)
        groups = rest
    groups = [b for b in groups if b]
    groups.sort(key=_sort_key)
    return tuple(groups)


def redirect(blocks, i, f):
    cdef long long idx = i
    cdef unsigned long long fm = f
    cdef unsigned long long b
    cdef list out = []
    cdef long long j = 0
    for x in blocks:
        b = x
        out.append(b | fm if j == idx else b & ~fm)
        j += 1
    out = [b for b in out if b]
    out.sort(key=_sort_key)
    return tuple(out)


def block_containing(blocks, mask):
    cdef unsigned long long low = _low(<unsigned long long> mask)
    cdef unsigned long long b
    for x in blocks:
        b = x
        if b & low:
            return x
    return 0
