"""Closed intervals and fault-tolerant fusion of interval measurements.

Given L measurement intervals of which at most f are faulty, the fused
estimate takes the (f+1)-th largest lower endpoint as its left end and the
(f+1)-th smallest upper endpoint as its right end.  Sweeping f over a range
yields a nested chain of estimates; pushing a distribution over fault counts
through the rule yields a distribution over fused intervals.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError

PROB_TOLERANCE = 1e-9
MAX_SEED = 2**64 - 1


@dataclass(frozen=True, order=True)
class Interval:
    """Closed real interval [lo, hi] with finite endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise DomainError("interval endpoints must be finite")
        if lo > hi:
            raise DomainError(f"interval lower endpoint {lo} exceeds upper endpoint {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def contains_point(self, t: float) -> bool:
        return self.lo <= t <= self.hi

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


# A fused estimate is an interval, or None when the computed left endpoint
# exceeds the right one (the empty result).
FusionResult = Interval | None


def fused_subset(inner: FusionResult, outer: FusionResult) -> bool:
    """Containment on fused results; the empty result is inside everything."""
    if inner is None:
        return True
    if outer is None:
        return False
    return outer.contains_interval(inner)


def _result_key(result: FusionResult) -> tuple:
    # canonical sort order: empty first, then by (lo, hi)
    return (0, 0.0, 0.0) if result is None else (1, result.lo, result.hi)


@dataclass(frozen=True)
class GradedIntervals:
    """Fused estimates for consecutive fault budgets f_min..f_max.

    Adjacent levels must be nested (each level inside the next); the
    constructor checks this rather than repairing violations.
    """

    f_min: int
    levels: tuple[FusionResult, ...]

    def __post_init__(self) -> None:
        levels = tuple(self.levels)
        object.__setattr__(self, "levels", levels)
        if self.f_min < 0:
            raise DomainError("f_min must be nonnegative")
        if not levels:
            raise DomainError("graded intervals need at least one level")
        for i in range(len(levels) - 1):
            if not fused_subset(levels[i], levels[i + 1]):
                raise DomainError(f"levels {i} and {i + 1} are not nested")

    @property
    def f_max(self) -> int:
        return self.f_min + len(self.levels) - 1

    def level(self, f: int) -> FusionResult:
        if not self.f_min <= f <= self.f_max:
            raise DomainError(f"fault count {f} outside range {self.f_min}..{self.f_max}")
        return self.levels[f - self.f_min]


@dataclass(frozen=True)
class FaultDistribution:
    """Discrete probability distribution over fault counts."""

    support: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        support = tuple(sorted((int(f), float(p)) for f, p in self.support))
        object.__setattr__(self, "support", support)
        if not support:
            raise DomainError("fault distribution has empty support")
        counts = [f for f, _ in support]
        if len(set(counts)) != len(counts):
            raise DomainError("duplicate fault count in distribution")
        if counts[0] < 0:
            raise DomainError("fault counts must be nonnegative")
        if any(not (p > 0) for _, p in support):
            raise DomainError("probabilities must be positive")
        total = sum(p for _, p in support)
        if abs(total - 1.0) > PROB_TOLERANCE:
            raise DomainError(f"probabilities sum to {total!r}, expected 1")

    @classmethod
    def from_dict(cls, pmf: dict[int, float]) -> FaultDistribution:
        return cls(tuple(pmf.items()))


@dataclass(frozen=True)
class IntervalDistribution:
    """Discrete distribution over fused results.

    Atoms with identical results are merged with their probabilities summed,
    and stored in canonical order (empty first, then by endpoints).
    """

    atoms: tuple[tuple[FusionResult, float], ...]

    def __post_init__(self) -> None:
        merged: dict[FusionResult, float] = {}
        for result, p in self.atoms:
            if result is not None and not isinstance(result, Interval):
                raise DomainError(f"not a fusion result: {result!r}")
            merged[result] = merged.get(result, 0.0) + float(p)
        if not merged:
            raise DomainError("interval distribution has no atoms")
        if any(not (p > 0) for p in merged.values()):
            raise DomainError("probabilities must be positive")
        total = sum(merged.values())
        if abs(total - 1.0) > PROB_TOLERANCE:
            raise DomainError(f"probabilities sum to {total!r}, expected 1")
        atoms = tuple(sorted(merged.items(), key=lambda a: _result_key(a[0])))
        object.__setattr__(self, "atoms", atoms)


def fuse(intervals: Iterable[Interval], f: int) -> FusionResult:
    """Fuse measurement intervals, tolerating up to f faulty ones.

    The left endpoint is the (f+1)-th largest lower bound and the right
    endpoint the (f+1)-th smallest upper bound; an inverted pair yields the
    empty result.  Invariant under permutation of the input.
    """
    items = list(intervals)
    if not items:
        raise DomainError("no measurements")
    if f < 0:
        raise DomainError("fault count must be nonnegative")
    if f >= len(items):
        raise DomainError("fault count exceeds measurement count")
    c = sorted((iv.lo for iv in items), reverse=True)[f]
    d = sorted(iv.hi for iv in items)[f]
    return Interval(c, d) if c <= d else None


def graded_fusion(intervals: Iterable[Interval], f_min: int, f_max: int) -> GradedIntervals:
    """Fuse once per fault budget in f_min..f_max.

    The levels are nested by the fusion rule itself; the GradedIntervals
    constructor re-asserts the chain condition.
    """
    items = list(intervals)
    if not items:
        raise DomainError("no measurements")
    if not 0 <= f_min <= f_max <= len(items) - 1:
        raise DomainError("invalid fault range")
    return GradedIntervals(f_min, tuple(fuse(items, f) for f in range(f_min, f_max + 1)))


def as_rough_pair(graded: GradedIntervals) -> tuple[FusionResult, FusionResult]:
    """View a two-level chain as its (lower, upper) pair."""
    if len(graded.levels) != 2:
        raise DomainError("not a rough pair")
    return graded.levels[0], graded.levels[1]


def random_graded(intervals: Iterable[Interval], dist: FaultDistribution) -> IntervalDistribution:
    """Push a fault-count distribution through the fusion rule.

    Fault counts that fuse to the same result have their probabilities
    pooled into one atom.
    """
    items = list(intervals)
    if not items:
        raise DomainError("no measurements")
    pooled: dict[FusionResult, float] = {}
    for f, p in dist.support:
        if f >= len(items):
            raise DomainError("fault count exceeds measurement count")
        result = fuse(items, f)
        pooled[result] = pooled.get(result, 0.0) + p
    return IntervalDistribution(tuple(pooled.items()))


def sample(dist: IntervalDistribution, seed: int) -> FusionResult:
    """Draw one atom, reproducibly for a given seed.

    Uses the stdlib Mersenne Twister seeded with `seed`; a single uniform
    draw is mapped through the cumulative probabilities of the atoms in
    their canonical order.
    """
    if not 0 <= seed <= MAX_SEED:
        raise DomainError("seed must be an unsigned 64-bit integer")
    x = random.Random(seed).random()
    acc = 0.0
    for result, p in dist.atoms:
        acc += p
        if x < acc:
            return result
    return dist.atoms[-1][0]
