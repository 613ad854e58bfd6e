"""Named ground sets and bitmask-backed subsets.

Every structure in this package lives over a :class:`GroundSet`, a fixed
ordering of distinct element names.  Subsets of the ground set are stored
as integer bitmasks (bit i set means element i is in).  :class:`Subset`
is the thin named wrapper used at API boundaries; internal algorithms
work on the raw masks.
"""

from .errors import GroundMismatchError, ParseError

__all__ = ["GroundSet", "Subset", "check_same_ground"]


class GroundSet:
    """An ordered collection of distinct element names."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(str(x) for x in names)
        if not names:
            raise ValueError("ground set must not be empty")
        index = {}
        for i, name in enumerate(names):
            if name in index:
                raise ValueError("duplicate element name: %r" % name)
            if not name or any(ch in name for ch in "{},; \t\n"):
                raise ValueError("invalid element name: %r" % name)
            index[name] = i
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, key, value):
        raise AttributeError("GroundSet is immutable")

    @property
    def size(self):
        return len(self.names)

    @property
    def full_mask(self):
        return (1 << len(self.names)) - 1

    def bit(self, name):
        """Bit index of a single element name."""
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("%r is not an element of %r" % (name, self)) from None

    def mask_of(self, elements):
        """Bitmask of an iterable of element names."""
        m = 0
        for name in elements:
            m |= 1 << self.bit(name)
        return m

    def names_of(self, mask):
        """Tuple of element names in a bitmask, in ground order."""
        self.check_mask(mask)
        return tuple(n for i, n in enumerate(self.names) if mask >> i & 1)

    def check_mask(self, mask):
        if not isinstance(mask, int) or mask < 0 or mask & ~self.full_mask:
            raise ValueError("not a subset mask of %r: %r" % (self, mask))
        return mask

    def subset(self, elements):
        return Subset(self, self.mask_of(elements))

    def singletons(self):
        return tuple(Subset(self, 1 << i) for i in range(len(self.names)))

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __repr__(self):
        return "GroundSet(%s)" % ",".join(self.names)


def check_same_ground(a, b):
    """Raise unless a and b live over the same ground set."""
    if a.ground != b.ground:
        raise GroundMismatchError(
            "mixed ground sets: %r and %r" % (a.ground, b.ground)
        )


class Subset:
    """A subset of a ground set, stored as a bitmask."""

    __slots__ = ("ground", "mask")

    def __init__(self, ground, mask):
        ground.check_mask(mask)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, key, value):
        raise AttributeError("Subset is immutable")

    @classmethod
    def parse(cls, ground, text):
        """Parse a comma-separated element list, e.g. ``a,b,c``.

        An empty string denotes the empty subset.
        """
        text = text.strip()
        if not text:
            return cls(ground, 0)
        try:
            return cls(ground, ground.mask_of(p.strip() for p in text.split(",")))
        except KeyError as exc:
            raise ParseError(str(exc)) from None

    def complement(self):
        return Subset(self.ground, self.ground.full_mask & ~self.mask)

    def names(self):
        return self.ground.names_of(self.mask)

    def issubset(self, other):
        check_same_ground(self, other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other):
        check_same_ground(self, other)
        return self.mask & other.mask == 0

    def __and__(self, other):
        check_same_ground(self, other)
        return Subset(self.ground, self.mask & other.mask)

    def __or__(self, other):
        check_same_ground(self, other)
        return Subset(self.ground, self.mask | other.mask)

    def __sub__(self, other):
        check_same_ground(self, other)
        return Subset(self.ground, self.mask & ~other.mask)

    def __eq__(self, other):
        return (
            isinstance(other, Subset)
            and self.ground == other.ground
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.ground, self.mask))

    def __len__(self):
        return bin(self.mask).count("1")

    def __bool__(self):
        return self.mask != 0

    def __iter__(self):
        return iter(self.names())

    def __contains__(self, name):
        return name in self.ground and self.mask >> self.ground.bit(name) & 1 == 1

    def __repr__(self):
        return "{%s}" % ",".join(self.names())
