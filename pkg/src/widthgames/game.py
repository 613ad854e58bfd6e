"""The partition pursuit game and its monotone variant.

The captain announces partitions from the scenario's family; the robber
occupies a ground element.  Play opens with the one-block partition.
After each announcement the robber may relocate anywhere inside the
block of the common coarsening of the standing and announced partitions
that contains his current block; then the announced partition stands.
The captain wins as soon as the robber's block belongs to the simple
family.  The monotone variant only allows announcements whose blocks
each lie inside or outside the robber's current block.

Positions are solved by a least-fixpoint attractor over (partition,
block) pairs: the robber's exact element never matters beyond its
block.
"""

from dataclasses import dataclass, field
from typing import Optional

from . import _kernel as kernel
from .errors import LimitExceededError, ValidationError
from .ground import Subset, check_same_ground
from .partitions import Partition
from .decomposition import TreeDec, validate_tdec
from .trees import Tree

__all__ = [
    "CAPTAIN",
    "ROBBER",
    "GAME_LIMIT",
    "Position",
    "StrategyNode",
    "StrategyTree",
    "Verdict",
    "Bramble",
    "BrambleReport",
    "legal_robber_moves",
    "solve",
    "verify_strategy",
    "strategy_to_tdec",
    "find_bramble",
    "check_bramble",
    "bramble_escape_check",
]

CAPTAIN = "Captain"
ROBBER = "Robber"
GAME_LIMIT = 7


@dataclass(frozen=True)
class Position:
    """A standing partition with the robber on one element."""

    partition: Partition
    robber: int

    def __post_init__(self):
        if not 0 <= self.robber < self.partition.ground.size:
            raise ValueError("robber element out of range")

    @property
    def ground(self):
        return self.partition.ground

    def space_mask(self):
        return kernel.block_containing(self.partition.blocks, 1 << self.robber)

    def space(self):
        return Subset(self.partition.ground, self.space_mask())


@dataclass(frozen=True)
class StrategyNode:
    """One strategy position: the standing partition, the robber space,
    the captain's next announcement (None at capture leaves) and one
    child per robber response."""

    partition: Partition
    space: Subset
    move: Optional[Partition]
    children: tuple


@dataclass(frozen=True)
class StrategyTree:
    root: StrategyNode
    monotone: bool

    @property
    def ground(self):
        return self.root.partition.ground

    def nodes(self):
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(reversed(node.children))
        return tuple(out)


@dataclass(frozen=True)
class Verdict:
    winner: str
    strategy: Optional[StrategyTree]
    positions: dict = field(compare=False)


def _refines(blocks, x):
    """Every block inside x or disjoint from it."""
    return all(b & x == 0 or b & ~x == 0 for b in blocks)


def legal_robber_moves(scenario, position, next_partition):
    """All positions the robber can reach when the captain announces
    next_partition, each paired with a capture flag."""
    check_same_ground(scenario, position.partition)
    check_same_ground(scenario, next_partition)
    if not scenario.contains_partition(next_partition):
        raise ValueError("announcement is not in the partition family")
    x = position.space_mask()
    joined = kernel.join(position.partition.blocks, next_partition.blocks)
    y = kernel.block_containing(joined, x)
    out = []
    for r in range(scenario.ground.size):
        if not y >> r & 1:
            continue
        pos = Position(next_partition, r)
        out.append((pos, scenario.contains_simple_mask(pos.space_mask())))
    return tuple(out)


def solve(scenario, monotone=False, limit=GAME_LIMIT):
    """Decide the game by attractor iteration.

    The winning-region map sends (partition, space) to the attractor
    round in which the position was won; terminal captures are round 0.
    """
    ground = scenario.ground
    if ground.size > limit:
        raise LimitExceededError(
            "ground size %d exceeds game limit %d" % (ground.size, limit)
        )
    members = scenario.partition_members()
    blocks = [p.blocks for p in members]
    opening = None
    one_block = (ground.full_mask,)
    for i, p in enumerate(members):
        if p.blocks == one_block:
            opening = i

    simple_cache = {}

    def is_simple(m):
        if m not in simple_cache:
            simple_cache[m] = scenario.contains_simple_mask(m)
        return simple_cache[m]

    join_cache = {}

    def joined(i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in join_cache:
            join_cache[key] = kernel.join(blocks[key[0]], blocks[key[1]])
        return join_cache[key]

    legal_cache = {}

    def legal(x):
        if monotone:
            if x not in legal_cache:
                legal_cache[x] = tuple(
                    j for j in range(len(members)) if _refines(blocks[j], x)
                )
            return legal_cache[x]
        return range(len(members))

    succ_cache = {}

    def successors(pi, x, pj):
        y = kernel.block_containing(joined(pi, pj), x)
        key = (pj, y)
        if key not in succ_cache:
            succ_cache[key] = tuple(
                (pj, bi) for bi, b in enumerate(blocks[pj]) if b & y
            )
        return succ_cache[key]

    rank = {}
    for pi in range(len(members)):
        for bi, b in enumerate(blocks[pi]):
            if is_simple(b):
                rank[(pi, bi)] = 0

    pending = [
        (pi, bi)
        for pi in range(len(members))
        for bi in range(len(blocks[pi]))
        if (pi, bi) not in rank
    ]
    level = 0
    while True:
        level += 1
        won = set(rank)
        added = []
        for pos in pending:
            pi, bi = pos
            x = blocks[pi][bi]
            for pj in legal(x):
                if all(s in won for s in successors(pi, x, pj)):
                    rank[pos] = level
                    added.append(pos)
                    break
        if not added:
            break
        pending = [pos for pos in pending if pos not in rank]

    positions = {
        (members[pi], Subset(ground, blocks[pi][bi])): r
        for (pi, bi), r in rank.items()
    }

    captain_wins = opening is not None and (opening, 0) in rank
    if not captain_wins:
        return Verdict(ROBBER, None, positions)

    def build(pi, bi):
        x = blocks[pi][bi]
        if is_simple(x):
            return StrategyNode(members[pi], Subset(ground, x), None, ())
        r = rank[(pi, bi)]
        best = None
        for pj in legal(x):
            succ = successors(pi, x, pj)
            if not all(s in rank for s in succ):
                continue
            worst = max(rank[s] for s in succ)
            if worst >= r:
                continue
            key = (worst, members[pj].blocks)
            if best is None or key < best[0]:
                best = (key, pj, succ)
        if best is None:
            raise ValidationError("winning region has no advancing move")
        _, pj, succ = best
        children = tuple(build(*s) for s in sorted(succ, key=lambda s: blocks[s[0]][s[1]]))
        return StrategyNode(members[pi], Subset(ground, x), members[pj], children)

    strategy = StrategyTree(build(opening, 0), monotone)
    return Verdict(CAPTAIN, strategy, positions)


def verify_strategy(scenario, strat):
    """Replay a strategy tree against every robber response.

    Checks legality of every announcement, the monotone restriction when
    the tree claims it, completeness of the children, and capture at
    every leaf.  Raises on any defect, returns True otherwise.
    """
    ground = scenario.ground
    root = strat.root
    if root.partition.blocks != (ground.full_mask,):
        raise ValidationError("strategy must open with the one-block partition")
    if not scenario.contains_partition(root.partition):
        raise ValidationError("opening partition is not in the family")

    def recurse(node):
        if node.space.mask not in node.partition.blocks:
            raise ValidationError("space is not a block of the standing partition")
        if not node.children:
            if node.move is not None:
                raise ValidationError("leaf with a pending move")
            if not scenario.contains_simple_mask(node.space.mask):
                raise ValidationError("leaf without capture")
            return
        move = node.move
        if move is None:
            raise ValidationError("internal node without a move")
        if not scenario.contains_partition(move):
            raise ValidationError("announcement is not in the family")
        if strat.monotone and not _refines(move.blocks, node.space.mask):
            raise ValidationError("announcement violates the monotone restriction")
        joined = kernel.join(node.partition.blocks, move.blocks)
        y = kernel.block_containing(joined, node.space.mask)
        expected = sorted(b for b in move.blocks if b & y)
        got = sorted(child.space.mask for child in node.children)
        if expected != got:
            raise ValidationError("children do not cover the robber's responses")
        for child in node.children:
            if child.partition != move:
                raise ValidationError("child does not stand on the announcement")
            recurse(child)

    recurse(root)
    return True


def strategy_to_tdec(scenario, strat):
    """Read a monotone winning strategy as a tree decomposition.

    Strategy nodes become tree nodes; capture leaves keep their spaces
    as labels.  At an internal node the components' label unions are the
    blocks of the announcement inside the space plus the complement of
    the space, a coarsening of the announcement.  A depth-0 capture maps
    to the two-node tree with one empty label.
    """
    if not strat.monotone:
        raise ValueError("only a monotone strategy converts")
    verify_strategy(scenario, strat)
    ground = scenario.ground
    root = strat.root
    if not root.children:
        dec = TreeDec(
            ground, Tree(2, [(0, 1)]), {0: ground.full_mask, 1: 0}
        )
    else:
        ids = {}
        edges = []
        labels = {}
        order = [root]
        while order:
            node = order.pop()
            if node not in ids:
                ids[node] = len(ids)
            for child in node.children:
                ids[child] = len(ids)
                edges.append((ids[node], ids[child]))
                order.append(child)
            if not node.children:
                labels[ids[node]] = node.space.mask
        dec = TreeDec(ground, Tree(len(ids), edges), labels)
    report = validate_tdec(scenario, dec)
    if not report.ok:
        raise ValidationError(
            "strategy produced an invalid decomposition: %r" % (report.witnesses,)
        )
    return dec


class Bramble:
    """A nonempty family of nonempty, pairwise intersecting subsets."""

    __slots__ = ("ground", "sets")

    def __init__(self, ground, sets):
        masks = sorted({s.mask if isinstance(s, Subset) else ground.check_mask(s)
                        for s in sets})
        if not masks:
            raise ValueError("a bramble has at least one member")
        if masks[0] == 0:
            raise ValueError("bramble members are nonempty")
        for i, a in enumerate(masks):
            for b in masks[i + 1:]:
                if a & b == 0:
                    raise ValueError("bramble members must pairwise intersect")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "sets", tuple(Subset(ground, m) for m in masks))

    def __setattr__(self, key, value):
        raise AttributeError("Bramble is immutable")

    def masks(self):
        return tuple(s.mask for s in self.sets)

    def __repr__(self):
        return "Bramble(%s)" % ", ".join(repr(s) for s in self.sets)


@dataclass(frozen=True)
class BrambleReport:
    covers: bool
    avoids: bool
    witnesses: tuple

    @property
    def ok(self):
        return self.covers and self.avoids


def check_bramble(scenario, bramble):
    """Does the family meet every member partition, and does it avoid
    the simple family?"""
    check_same_ground(scenario, bramble)
    witnesses = []
    masks = set(bramble.masks())
    covers = True
    for p in scenario.partition_members():
        if not any(b in masks for b in p.blocks):
            covers = False
            witnesses.append(("MISSES", p))
    avoids = True
    for m in sorted(masks):
        if scenario.contains_simple_mask(m):
            avoids = False
            witnesses.append(("SIMPLE", Subset(scenario.ground, m)))
    return BrambleReport(covers, avoids, tuple(witnesses))


def find_bramble(scenario):
    """Search for a bramble avoiding the simple family.

    Any such bramble yields a choice of one non-simple block per member
    partition with all choices pairwise intersecting, and the chosen
    blocks themselves form such a bramble, so only choice functions are
    searched.  Partitions are processed by decreasing block count, the
    most constrained first.  When the family has no partitions at all,
    any single non-simple set is a witness.
    """
    members = scenario.partition_members()
    if not members:
        for m in range(1, scenario.ground.full_mask + 1):
            if not scenario.contains_simple_mask(m):
                return Bramble(scenario.ground, (m,))
        return None
    order = sorted(members, key=lambda p: (-len(p.blocks), p.blocks))
    options = []
    for p in order:
        opts = [b for b in p.blocks if not scenario.contains_simple_mask(b)]
        if not opts:
            return None
        options.append(opts)

    chosen = []

    def backtrack(i):
        if i == len(options):
            return True
        for b in options[i]:
            if all(b & c for c in chosen):
                chosen.append(b)
                if backtrack(i + 1):
                    return True
                chosen.pop()
        return False

    if not backtrack(0):
        return None
    return Bramble(scenario.ground, tuple(chosen))


def bramble_escape_check(scenario, bramble, plays):
    """Simulate the bramble-following robber against captain plays.

    Each play is a sequence of announcements after the mandatory
    one-block opening.  The robber always relocates to a bramble member
    among the announced blocks; pairwise intersection keeps that move
    inside the allowed block of the common coarsening.  Returns True
    iff the robber survives every play.
    """
    if bramble.ground != scenario.ground:
        check_same_ground(scenario, bramble)
    report = check_bramble(scenario, bramble)
    if not report.ok:
        raise ValidationError("not an avoiding bramble: %r" % (report.witnesses,))
    ground = scenario.ground
    full = ground.full_mask
    opening = Partition.indiscrete(ground)
    if not scenario.contains_partition(opening):
        return True
    masks = set(bramble.masks())
    for play in plays:
        current = opening
        space = full
        if scenario.contains_simple_mask(space):
            return False
        for announced in play:
            if not scenario.contains_partition(announced):
                raise ValueError("illegal captain move %r" % (announced,))
            target = next(
                (b for b in announced.blocks if b in masks), None
            )
            if target is None:
                raise ValidationError("bramble misses a played partition")
            joined = kernel.join(current.blocks, announced.blocks)
            y = kernel.block_containing(joined, space)
            if target & ~y:
                raise ValidationError("bramble move left the allowed block")
            current, space = announced, target
            if scenario.contains_simple_mask(space):
                return False
    return True
