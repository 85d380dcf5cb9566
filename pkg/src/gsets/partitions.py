"""Partitions of a finite universe and refinement-ordered families of them.

A granular set is a sequence of partitions, stored finest first, in which
every block of a coarser level is a union of blocks of the finer level
below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import DomainError


class Partition:
    """Partition of a finite universe into disjoint nonempty blocks.

    The universe keeps the order in which the elements first appeared in the
    source data; blocks are normalised to that order (elements within a block
    by universe position, blocks by the position of their first element),
    which makes serialisation deterministic.  Equality and hashing ignore the
    ordering and compare universes and blocks as sets.
    """

    __slots__ = ("universe", "blocks", "_block_index")

    def __init__(self, universe: Iterable[Hashable], blocks: Iterable[Iterable[Hashable]]):
        universe = tuple(universe)
        position: dict = {}
        for x in universe:
            if x in position:
                raise DomainError(f"duplicate element in universe: {x!r}")
            position[x] = len(position)
        assigned: set = set()
        normalized = []
        for raw in blocks:
            members = set(raw)
            if not members:
                raise DomainError("empty block")
            for x in members:
                if x not in position:
                    raise DomainError(f"block element {x!r} is not in the universe")
                if x in assigned:
                    raise DomainError(f"element {x!r} appears in more than one block")
                assigned.add(x)
            normalized.append(tuple(sorted(members, key=position.__getitem__)))
        if len(assigned) != len(universe):
            missing = next(x for x in universe if x not in assigned)
            raise DomainError(f"blocks do not cover the universe: {missing!r} unassigned")
        normalized.sort(key=lambda block: position[block[0]])
        self.universe = universe
        self.blocks = tuple(normalized)
        self._block_index = {x: frozenset(block) for block in self.blocks for x in block}

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[Hashable]]) -> Partition:
        """Build a partition whose universe order is the flattened block order."""
        blocks = [tuple(block) for block in blocks]
        return cls((x for block in blocks for x in block), blocks)

    def block_of(self, x: Hashable) -> frozenset:
        try:
            return self._block_index[x]
        except KeyError:
            raise DomainError(f"element {x!r} is not in the universe") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return (
            frozenset(self.universe) == frozenset(other.universe)
            and frozenset(self._block_index.values()) == frozenset(other._block_index.values())
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.universe), frozenset(self._block_index.values())))

    def __repr__(self) -> str:
        return f"Partition({[list(block) for block in self.blocks]!r})"


def refines(finer: Partition, coarser: Partition) -> bool:
    """True when every block of `finer` lies inside one block of `coarser`."""
    if frozenset(finer.universe) != frozenset(coarser.universe):
        raise DomainError("universe mismatch")
    for block in finer.blocks:
        target = coarser.block_of(block[0])
        if any(x not in target for x in block[1:]):
            return False
    return True


@dataclass(frozen=True)
class GranularSet:
    """Partitions of one universe ordered finest first, adjacent levels refinement-related."""

    levels: tuple[Partition, ...]

    def __post_init__(self) -> None:
        levels = tuple(self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise DomainError("granular set needs at least one level")
        base = frozenset(levels[0].universe)
        for i, part in enumerate(levels[1:], start=1):
            if frozenset(part.universe) != base:
                raise DomainError(f"universe mismatch at level {i}")
        for i in range(len(levels) - 1):
            if not refines(levels[i], levels[i + 1]):
                raise DomainError(f"levels {i} and {i + 1} are not refinement-related")

    @property
    def universe(self) -> tuple:
        return self.levels[0].universe

    def __len__(self) -> int:
        return len(self.levels)


def validate_granular(partitions: Sequence[Partition], coarsest_first: bool = False) -> GranularSet:
    """Build a GranularSet, normalising to finest-first storage.

    Adjacency is checked in the order the partitions were given, so a failure
    reports the offending input pair by index.
    """
    parts = list(partitions)
    if not parts:
        raise DomainError("no partitions")
    for i in range(len(parts) - 1):
        finer, coarser = (parts[i + 1], parts[i]) if coarsest_first else (parts[i], parts[i + 1])
        if not refines(finer, coarser):
            raise DomainError(f"partitions {i} and {i + 1} are not refinement-related")
    ordered = tuple(reversed(parts)) if coarsest_first else tuple(parts)
    return GranularSet(ordered)
