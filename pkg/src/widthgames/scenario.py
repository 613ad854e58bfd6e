"""Scenarios: a family of partitions paired with a family of capture sets.

A scenario over a ground set A is a pair (partition family, simple-set
family) subject to three axioms:

  SC1  the partition family is closed under coarsening;
  SC2  a subset of a simple set that occurs as a block of a member
       partition is itself simple;
  SC3  every simple set splits A into a two-block member partition.

Weak submodularity is the extra exchange property that powers the
rewriting of search trees: for member partitions P, Q with blocks X, Y
not covering A, some nonempty F avoiding both lets the grow-one-block
rearrangement of P at X or of Q at Y stay inside the family.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import GroundMismatchError, NotWeaklySubmodularError
from .ground import Subset, check_same_ground
from .partitions import Partition, enumerate_partitions, submasks

__all__ = [
    "Scenario",
    "ExplicitScenario",
    "AxiomReport",
    "WeakSubmodReport",
    "check_axioms",
    "check_weak_submodularity",
    "weak_submod_witness",
]


class Scenario:
    """Membership oracles for a partition family and a simple-set family."""

    def __init__(self, ground, partition_oracle, simple_oracle, kind_tag="oracle"):
        self.ground = ground
        self._partition_oracle = partition_oracle
        self._simple_oracle = simple_oracle
        self.kind_tag = kind_tag
        self._members = None

    def contains_partition(self, p):
        check_same_ground(self, p)
        return bool(self._partition_oracle(p))

    def contains_simple(self, s):
        check_same_ground(self, s)
        return bool(self._simple_oracle(s))

    def contains_simple_mask(self, mask):
        return bool(self._simple_oracle(Subset(self.ground, mask)))

    def partition_members(self):
        """All member partitions, in a fixed deterministic order.

        Materialized by filtering the full partition enumeration, so the
        ground set must be within the enumeration limit.
        """
        if self._members is None:
            self._members = tuple(
                p for p in enumerate_partitions(self.ground)
                if self._partition_oracle(p)
            )
        return self._members

    def simple_members(self):
        full = self.ground.full_mask
        return tuple(
            Subset(self.ground, m)
            for m in range(full + 1)
            if self._simple_oracle(Subset(self.ground, m))
        )

    def explicit(self):
        return ExplicitScenario(
            self.ground, self.partition_members(), self.simple_members(),
            kind_tag=self.kind_tag,
        )

    def simple_union_covers_ground(self):
        covered = 0
        for s in self.simple_members():
            covered |= s.mask
        return covered == self.ground.full_mask

    def __repr__(self):
        return "Scenario(%r, kind=%s)" % (self.ground, self.kind_tag)


class ExplicitScenario(Scenario):
    """A scenario given by finite listings of both families."""

    def __init__(self, ground, partitions, simples, kind_tag="explicit"):
        partitions = frozenset(partitions)
        simples = frozenset(simples)
        for obj in (*partitions, *simples):
            if obj.ground != ground:
                raise GroundMismatchError(
                    "member %r is not over %r" % (obj, ground)
                )
        self.partitions = tuple(sorted(partitions, key=lambda p: p.blocks))
        self.simples = tuple(sorted(simples, key=lambda s: s.mask))
        self._partition_set = partitions
        self._simple_set = simples
        super().__init__(
            ground,
            self._partition_set.__contains__,
            self._simple_set.__contains__,
            kind_tag=kind_tag,
        )

    def partition_members(self):
        return self.partitions

    def simple_members(self):
        return self.simples

    def __repr__(self):
        return "ExplicitScenario(%r, %d partitions, %d simples)" % (
            self.ground, len(self.partitions), len(self.simples),
        )


@dataclass(frozen=True)
class AxiomReport:
    sc1: bool
    sc2: bool
    sc3: bool
    witnesses: tuple

    @property
    def ok(self):
        return self.sc1 and self.sc2 and self.sc3


@dataclass(frozen=True)
class WeakSubmodReport:
    holds: bool
    witness: Optional[tuple]


def check_axioms(scenario):
    """Test SC1, SC2 and SC3 on a materialized scenario.

    Violations are reported, never raised; each witness is a tagged
    tuple naming the offending objects.
    """
    ground = scenario.ground
    members = scenario.partition_members()
    member_set = set(members)
    simples = scenario.simple_members()
    simple_masks = {s.mask for s in simples}
    witnesses = []

    sc1 = True
    for q in enumerate_partitions(ground):
        if q in member_set:
            continue
        for p in members:
            if q.is_coarser_than(p):
                sc1 = False
                witnesses.append(("SC1", p, q))
                break

    sc2 = True
    for p in members:
        for b in p.blocks:
            if b in simple_masks:
                continue
            for s in simples:
                if b & ~s.mask == 0:
                    sc2 = False
                    witnesses.append(("SC2", p, Subset(ground, b), s))
                    break

    sc3 = True
    full = ground.full_mask
    for s in simples:
        two = Partition(ground, (s.mask, full & ~s.mask))
        if two not in member_set:
            sc3 = False
            witnesses.append(("SC3", s))

    return AxiomReport(sc1, sc2, sc3, tuple(witnesses))


def _has_witness(scenario, p, q, x_mask, y_mask, pool):
    for f in submasks(pool, nonempty=True):
        fs = Subset(scenario.ground, f)
        if scenario.contains_partition(p.redirect(x_mask, f)):
            return "P", fs
        if scenario.contains_partition(q.redirect(y_mask, f)):
            return "Q", fs
    return None


def check_weak_submodularity(scenario):
    """Scan every member pair and block pair for the exchange property."""
    members = scenario.partition_members()
    full = scenario.ground.full_mask
    for i, p in enumerate(members):
        for q in members[i:]:
            for x in p.blocks:
                for y in q.blocks:
                    pool = full & ~(x | y)
                    if pool == 0:
                        continue
                    if _has_witness(scenario, p, q, x, y, pool) is None:
                        witness = (
                            p, q,
                            Subset(scenario.ground, x),
                            Subset(scenario.ground, y),
                        )
                        return WeakSubmodReport(False, witness)
    return WeakSubmodReport(True, None)


def weak_submod_witness(scenario, p, q, x, y):
    """First subset F making a grow-one-block rearrangement stay in the
    family, trying the P side before the Q side for each F.

    Returns (side, F) with side "P" or "Q".  Raises if no F works, which
    certifies the scenario is not weakly submodular.
    """
    check_same_ground(scenario, p)
    check_same_ground(scenario, q)
    x_mask = x.mask if isinstance(x, Subset) else x
    y_mask = y.mask if isinstance(y, Subset) else y
    if x_mask not in p.blocks:
        raise ValueError("x is not a block of p")
    if y_mask not in q.blocks:
        raise ValueError("y is not a block of q")
    pool = scenario.ground.full_mask & ~(x_mask | y_mask)
    if pool == 0:
        raise ValueError("blocks x and y cover the ground set")
    hit = _has_witness(scenario, p, q, x_mask, y_mask, pool)
    if hit is None:
        raise NotWeaklySubmodularError(
            "no rearrangement subset for %s/%s in %s and %s" % (
                scenario.ground.names_of(x_mask),
                scenario.ground.names_of(y_mask), p, q,
            ),
            witness=(p, q, Subset(scenario.ground, x_mask),
                     Subset(scenario.ground, y_mask)),
        )
    return hit
