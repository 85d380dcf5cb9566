"""Nested chains of finite sets (graded families).

Elements are opaque hashable identifiers, typically object ids or attribute
names.  Adjacent levels must satisfy non-strict inclusion; repeated levels
are legal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError


@dataclass(frozen=True)
class GradedFamily:
    """Chain of finite sets, smallest first, each level inside the next."""

    levels: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        levels = tuple(frozenset(level) for level in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise DomainError("graded family needs at least one level")
        for i in range(len(levels) - 1):
            if not levels[i] <= levels[i + 1]:
                stray = sorted(levels[i] - levels[i + 1], key=repr)[0]
                raise DomainError(
                    f"not nested at pair ({i}, {i + 1}): {stray!r} is missing from level {i + 1}"
                )

    def __len__(self) -> int:
        return len(self.levels)


def validate_graded(levels: Iterable[Iterable]) -> GradedFamily:
    """Build a GradedFamily, rejecting the first non-nested adjacent pair."""
    return GradedFamily(tuple(frozenset(level) for level in levels))


def is_rough_family(family: GradedFamily) -> bool:
    """True for the two-level special case (a lower/upper pair)."""
    return len(family.levels) == 2
