"""Information tables, indiscernibility partitions, and rough approximations.

Objects are rows, attributes are columns, and cells hold categorical tokens
compared by exact string equality.  Choosing an attribute set induces an
indiscernibility partition; a nested chain of attribute sets induces a
granular set; a target set of objects gets lower/upper approximations that
respond monotonically to growing targets and growing attribute sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .chains import GradedFamily, validate_graded
from .errors import DomainError
from .partitions import GranularSet, Partition, validate_granular


@dataclass(frozen=True)
class InformationTable:
    """Immutable objects-by-attributes table of categorical tokens."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        objects = tuple(self.objects)
        attributes = tuple(self.attributes)
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "rows", rows)
        if len(set(objects)) != len(objects):
            raise DomainError("duplicate object id")
        if len(set(attributes)) != len(attributes):
            raise DomainError("duplicate attribute name")
        if len(rows) != len(objects):
            raise DomainError(f"expected {len(objects)} rows, got {len(rows)}")
        for obj, row in zip(objects, rows):
            if len(row) != len(attributes):
                raise DomainError(f"row for {obj!r} has {len(row)} cells, expected {len(attributes)}")
            for cell in row:
                if not isinstance(cell, str) or not cell:
                    raise DomainError(f"row for {obj!r} has an empty or non-string cell")
        object.__setattr__(self, "_obj_pos", {o: i for i, o in enumerate(objects)})
        object.__setattr__(self, "_attr_pos", {a: j for j, a in enumerate(attributes)})

    def value(self, obj: str, attr: str) -> str:
        try:
            i = self._obj_pos[obj]
        except KeyError:
            raise DomainError(f"unknown object: {obj}") from None
        try:
            j = self._attr_pos[attr]
        except KeyError:
            raise DomainError(f"unknown attribute: {attr}") from None
        return self.rows[i][j]


@dataclass(frozen=True)
class ApproximationPair:
    """Lower and upper approximations of a target set of objects."""

    lower: frozenset[str]
    upper: frozenset[str]

    def __post_init__(self) -> None:
        lower = frozenset(self.lower)
        upper = frozenset(self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if not lower <= upper:
            raise DomainError("lower approximation must be inside the upper approximation")

    @property
    def boundary(self) -> frozenset[str]:
        return self.upper - self.lower


@dataclass(frozen=True)
class SensitivityRecord:
    """Approximation sizes and accuracy at one level of an attribute chain.

    Accuracy is |lower| / |upper|, taken to be 1 when the upper approximation
    is empty.
    """

    level_index: int
    attribute_count: int
    lower_size: int
    upper_size: int
    boundary_size: int
    accuracy: float

    def __post_init__(self) -> None:
        if self.boundary_size != self.upper_size - self.lower_size:
            raise DomainError("boundary size must be upper size minus lower size")
        if self.boundary_size < 0:
            raise DomainError("boundary size must be nonnegative")
        if not 0.0 <= self.accuracy <= 1.0:
            raise DomainError("accuracy must lie in [0, 1]")


def _attrs_in_table_order(table: InformationTable, attrs: Iterable[str]) -> tuple[str, ...]:
    wanted = set()
    for name in attrs:
        if name not in table._attr_pos:
            raise DomainError(f"unknown attribute: {name}")
        wanted.add(name)
    return tuple(a for a in table.attributes if a in wanted)


def _objects_in_table(table: InformationTable, target: Iterable[str]) -> frozenset[str]:
    target = frozenset(target)
    for obj in target:
        if obj not in table._obj_pos:
            raise DomainError(f"unknown object: {obj}")
    return target


def indiscernibility_partition(table: InformationTable, attrs: Iterable[str]) -> Partition:
    """Group objects that agree on every attribute in `attrs`.

    An empty attribute set discerns nothing and yields the one-block
    partition.
    """
    names = _attrs_in_table_order(table, attrs)
    columns = tuple(table._attr_pos[a] for a in names)
    groups: dict[tuple[str, ...], list[str]] = {}
    for obj, row in zip(table.objects, table.rows):
        signature = tuple(row[j] for j in columns)
        groups.setdefault(signature, []).append(obj)
    return Partition(table.objects, groups.values())


def granular_from_chain(table: InformationTable, chain: GradedFamily) -> GranularSet:
    """Indiscernibility partitions of a nested attribute chain, finest first.

    Larger attribute sets discern at least as much, so the partitions are
    refinement-ordered; that is asserted via validation rather than forced.
    """
    parts = [indiscernibility_partition(table, level) for level in chain.levels]
    try:
        return validate_granular(parts, coarsest_first=True)
    except DomainError as exc:
        raise AssertionError(
            "partitions of a nested attribute chain must be refinement-ordered"
        ) from exc


def lower_approx(table: InformationTable, attrs: Iterable[str], target: Iterable[str]) -> frozenset[str]:
    """Union of the indiscernibility blocks fully contained in the target."""
    target = _objects_in_table(table, target)
    part = indiscernibility_partition(table, attrs)
    return frozenset(x for block in part.blocks if target.issuperset(block) for x in block)


def upper_approx(table: InformationTable, attrs: Iterable[str], target: Iterable[str]) -> frozenset[str]:
    """Union of the indiscernibility blocks that intersect the target."""
    target = _objects_in_table(table, target)
    part = indiscernibility_partition(table, attrs)
    return frozenset(x for block in part.blocks if any(y in target for y in block) for x in block)


def approximation_pair(table: InformationTable, attrs: Iterable[str], target: Iterable[str]) -> ApproximationPair:
    """Lower and upper approximations computed from one shared partition."""
    target = _objects_in_table(table, target)
    part = indiscernibility_partition(table, attrs)
    lower: list[str] = []
    upper: list[str] = []
    for block in part.blocks:
        if target.issuperset(block):
            lower.extend(block)
        if any(y in target for y in block):
            upper.extend(block)
    return ApproximationPair(frozenset(lower), frozenset(upper))


def graded_approximations(
    table: InformationTable, attrs: Iterable[str], targets: GradedFamily
) -> tuple[GradedFamily, GradedFamily]:
    """Approximate every level of a nested target chain.

    Both output chains are themselves nested; that claim is asserted by
    validating them as graded families.
    """
    attr_names = _attrs_in_table_order(table, attrs)
    lowers = [lower_approx(table, attr_names, level) for level in targets.levels]
    uppers = [upper_approx(table, attr_names, level) for level in targets.levels]
    try:
        return validate_graded(lowers), validate_graded(uppers)
    except DomainError as exc:
        raise AssertionError("approximations of a nested target chain must nest") from exc


def sensitivity_profile(
    table: InformationTable, chain: GradedFamily, target: Iterable[str]
) -> list[SensitivityRecord]:
    """How approximation quality responds as the attribute set grows.

    One record per chain level, in chain order (smallest attribute set
    first).
    """
    target = _objects_in_table(table, target)
    records = []
    for i, attrs in enumerate(chain.levels):
        pair = approximation_pair(table, attrs, target)
        lower_size, upper_size = len(pair.lower), len(pair.upper)
        accuracy = lower_size / upper_size if upper_size else 1.0
        records.append(
            SensitivityRecord(
                level_index=i,
                attribute_count=len(attrs),
                lower_size=lower_size,
                upper_size=upper_size,
                boundary_size=upper_size - lower_size,
                accuracy=accuracy,
            )
        )
    return records
