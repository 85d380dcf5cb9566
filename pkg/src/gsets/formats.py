"""Parsing and canonical JSON serialisation for every value kind.

Input formats
-------------
* intervals: CSV with header ``lo,hi``, one interval per row, or a JSON
  array of two-element ``[lo, hi]`` arrays.
* information tables: CSV with header ``object,<attr1>,<attr2>,...``.
* chains and graded families: JSON array of arrays of name strings.
* fault distributions: JSON object mapping fault counts to probabilities.

The CSV dialect is deliberately strict: comma separated, no quoting,
tokens must be nonempty and carry no surrounding whitespace.  Anything
else is rejected with a 1-based location.

Output is canonical JSON: keys sorted, no insignificant whitespace,
blocks and objects ordered by the partition's universe order (or
lexicographically where no universe context exists), integral reals
rendered as integers and all other reals in shortest round-trip form,
and the empty fused result rendered as ``null``.  Parsing a canonical
document returns a value equal to the one serialised.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

from .chains import GradedFamily, validate_graded
from .errors import ParseError
from .infosys import ApproximationPair, InformationTable, SensitivityRecord
from .intervals import (
    FaultDistribution,
    FusionResult,
    GradedIntervals,
    Interval,
    IntervalDistribution,
)
from .partitions import GranularSet, Partition, validate_granular

_INT_RENDER_LIMIT = 2**53


def dumps_canonical(doc) -> str:
    """Serialise a JSON-ready document deterministically."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False)


def _real(x: float):
    x = float(x)
    if x.is_integer() and abs(x) <= _INT_RENDER_LIMIT:
        return int(x)
    return x


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: invalid JSON: {exc.msg}") from None


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _number(value, where: str) -> float:
    if not _is_number(value):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ParseError(f"{where}: non-finite value")
    return value


def _token(field: str, where: str) -> str:
    if not field:
        raise ParseError(f"{where}: empty cell")
    if field != field.strip():
        raise ParseError(f"{where}: token {field!r} has surrounding whitespace")
    return field


def _csv_real(field: str, where: str) -> float:
    token = _token(field, where)
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"{where}: not a number: {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"{where}: non-finite value {token!r}")
    return value


# ---------------------------------------------------------------------------
# intervals


def parse_intervals(text: str, fmt: str = "csv") -> list[Interval]:
    """Read interval measurements from CSV (header ``lo,hi``) or JSON."""
    if fmt == "csv":
        return _parse_intervals_csv(text)
    if fmt == "json":
        return _parse_intervals_json(text)
    raise ParseError(f"unknown interval format: {fmt!r}")


def _parse_intervals_csv(text: str) -> list[Interval]:
    lines = text.splitlines()
    if not lines or lines[0] != "lo,hi":
        raise ParseError("line 1: header must be 'lo,hi'")
    out = []
    for n, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 2:
            raise ParseError(f"line {n}: expected 2 fields, got {len(fields)}")
        lo = _csv_real(fields[0], f"line {n}")
        hi = _csv_real(fields[1], f"line {n}")
        if lo > hi:
            raise ParseError(f"line {n}: lower endpoint exceeds upper endpoint")
        out.append(Interval(lo, hi))
    return out


def _parse_intervals_json(text: str) -> list[Interval]:
    data = _load_json(text)
    if not isinstance(data, list):
        raise ParseError("top-level value must be an array of [lo, hi] pairs")
    out = []
    for i, item in enumerate(data, start=1):
        if not (isinstance(item, list) and len(item) == 2):
            raise ParseError(f"item {i}: expected [lo, hi]")
        lo = _number(item[0], f"item {i}")
        hi = _number(item[1], f"item {i}")
        if lo > hi:
            raise ParseError(f"item {i}: lower endpoint exceeds upper endpoint")
        out.append(Interval(lo, hi))
    return out


def intervals_doc(intervals: Iterable[Interval]) -> list:
    return [[_real(iv.lo), _real(iv.hi)] for iv in intervals]


def serialize_intervals(intervals: Iterable[Interval]) -> str:
    return dumps_canonical(intervals_doc(intervals))


def fusion_result_doc(result: FusionResult):
    return None if result is None else [_real(result.lo), _real(result.hi)]


def serialize_fusion_result(result: FusionResult) -> str:
    return dumps_canonical(fusion_result_doc(result))


def _fusion_result_from(data, where: str) -> FusionResult:
    if data is None:
        return None
    if not (isinstance(data, list) and len(data) == 2):
        raise ParseError(f"{where}: expected null or [lo, hi]")
    lo = _number(data[0], where)
    hi = _number(data[1], where)
    if lo > hi:
        raise ParseError(f"{where}: lower endpoint exceeds upper endpoint")
    return Interval(lo, hi)


def parse_fusion_result(text: str) -> FusionResult:
    return _fusion_result_from(_load_json(text), "value")


def graded_intervals_doc(graded: GradedIntervals) -> dict:
    return {
        "f_min": graded.f_min,
        "levels": [fusion_result_doc(level) for level in graded.levels],
    }


def serialize_graded_intervals(graded: GradedIntervals) -> str:
    return dumps_canonical(graded_intervals_doc(graded))


def parse_graded_intervals(text: str) -> GradedIntervals:
    data = _load_json(text)
    if not isinstance(data, dict) or set(data) != {"f_min", "levels"}:
        raise ParseError("expected an object with keys 'f_min' and 'levels'")
    f_min = data["f_min"]
    if not isinstance(f_min, int) or isinstance(f_min, bool):
        raise ParseError("'f_min' must be an integer")
    if not isinstance(data["levels"], list):
        raise ParseError("'levels' must be an array")
    levels = tuple(
        _fusion_result_from(item, f"level {i}") for i, item in enumerate(data["levels"], start=1)
    )
    return GradedIntervals(f_min, levels)


# ---------------------------------------------------------------------------
# distributions


def fault_distribution_doc(dist: FaultDistribution) -> dict:
    return {str(f): _real(p) for f, p in dist.support}


def serialize_fault_distribution(dist: FaultDistribution) -> str:
    return dumps_canonical(fault_distribution_doc(dist))


def parse_fault_distribution(text: str) -> FaultDistribution:
    data = _load_json(text)
    if not isinstance(data, dict) or not data:
        raise ParseError("expected a nonempty object mapping fault counts to probabilities")
    support = []
    for key, value in data.items():
        if not key.isdigit():
            raise ParseError(f"fault count {key!r} is not a nonnegative integer")
        support.append((int(key), _number(value, f"fault count {key}")))
    return FaultDistribution(tuple(support))


def interval_distribution_doc(dist: IntervalDistribution) -> dict:
    return {
        "atoms": [
            {"p": _real(p), "result": fusion_result_doc(result)} for result, p in dist.atoms
        ]
    }


def serialize_interval_distribution(dist: IntervalDistribution) -> str:
    return dumps_canonical(interval_distribution_doc(dist))


def parse_interval_distribution(text: str) -> IntervalDistribution:
    data = _load_json(text)
    if not isinstance(data, dict) or set(data) != {"atoms"} or not isinstance(data["atoms"], list):
        raise ParseError("expected an object with an 'atoms' array")
    atoms = []
    for i, item in enumerate(data["atoms"], start=1):
        where = f"atom {i}"
        if not isinstance(item, dict) or set(item) != {"p", "result"}:
            raise ParseError(f"{where}: expected an object with keys 'p' and 'result'")
        atoms.append((_fusion_result_from(item["result"], where), _number(item["p"], where)))
    return IntervalDistribution(tuple(atoms))


# ---------------------------------------------------------------------------
# tables


def parse_table(text: str) -> InformationTable:
    """Read an information table from CSV with header ``object,<attrs...>``."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("line 1: missing header")
    header = [_token(field, "line 1") for field in lines[0].split(",")]
    if header[0] != "object":
        raise ParseError("line 1: first header field must be 'object'")
    attributes = header[1:]
    if not attributes:
        raise ParseError("line 1: no attributes")
    seen_attrs = set()
    for name in attributes:
        if name in seen_attrs:
            raise ParseError(f"line 1: duplicate attribute {name!r}")
        seen_attrs.add(name)
    objects: list[str] = []
    rows: list[tuple[str, ...]] = []
    seen_objects = set()
    for n, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != len(header):
            raise ParseError(f"line {n}: expected {len(header)} fields, got {len(fields)}")
        tokens = [_token(field, f"line {n}") for field in fields]
        obj = tokens[0]
        if obj in seen_objects:
            raise ParseError(f"line {n}: duplicate object id {obj!r}")
        seen_objects.add(obj)
        objects.append(obj)
        rows.append(tuple(tokens[1:]))
    if not objects:
        raise ParseError("no objects")
    return InformationTable(tuple(objects), tuple(attributes), tuple(rows))


# ---------------------------------------------------------------------------
# chains and object sets


def parse_graded_family(text: str) -> GradedFamily:
    """Read a nested chain encoded as a JSON array of arrays of names."""
    data = _load_json(text)
    if not isinstance(data, list) or not data:
        raise ParseError("expected a nonempty array of arrays of names")
    levels = []
    for i, level in enumerate(data, start=1):
        if not isinstance(level, list) or not all(isinstance(x, str) for x in level):
            raise ParseError(f"level {i}: expected an array of name strings")
        levels.append(frozenset(level))
    return validate_graded(levels)


def parse_chain(text: str) -> GradedFamily:
    """Read an attribute chain; same wire format as any graded family."""
    return parse_graded_family(text)


def _ordered_ids(ids: Iterable[str], order: Sequence[str] | None) -> list[str]:
    ids = list(ids)
    for x in ids:
        if not isinstance(x, str):
            raise ParseError(f"identifier {x!r} is not a string")
    if order is None:
        return sorted(ids)
    position = {x: i for i, x in enumerate(order)}
    try:
        return sorted(ids, key=position.__getitem__)
    except KeyError:
        missing = next(x for x in ids if x not in position)
        raise ParseError(f"identifier {missing!r} is not in the supplied order") from None


def object_set_doc(ids: Iterable[str], order: Sequence[str] | None = None) -> list[str]:
    return _ordered_ids(ids, order)


def graded_family_doc(family: GradedFamily, order: Sequence[str] | None = None) -> list:
    # same wire shape parse_graded_family reads: an array of arrays of names
    return [object_set_doc(level, order) for level in family.levels]


def serialize_graded_family(family: GradedFamily, order: Sequence[str] | None = None) -> str:
    return dumps_canonical(graded_family_doc(family, order))


# ---------------------------------------------------------------------------
# partitions and granular sets


def partition_doc(partition: Partition) -> dict:
    blocks = [list(block) for block in partition.blocks]
    for block in blocks:
        for x in block:
            if not isinstance(x, str):
                raise ParseError(f"object id {x!r} is not a string")
    return {"blocks": blocks}


def serialize_partition(partition: Partition) -> str:
    return dumps_canonical(partition_doc(partition))


def _partition_from(data, where: str) -> Partition:
    if not isinstance(data, dict) or set(data) != {"blocks"} or not isinstance(data["blocks"], list):
        raise ParseError(f"{where}: expected an object with a 'blocks' array")
    blocks = []
    for i, block in enumerate(data["blocks"], start=1):
        if not isinstance(block, list) or not all(isinstance(x, str) for x in block):
            raise ParseError(f"{where}: block {i} must be an array of object id strings")
        blocks.append(block)
    return Partition.from_blocks(blocks)


def parse_partition(text: str) -> Partition:
    return _partition_from(_load_json(text), "value")


def granular_set_doc(granular: GranularSet) -> dict:
    return {"levels": [partition_doc(level) for level in granular.levels]}


def serialize_granular_set(granular: GranularSet) -> str:
    return dumps_canonical(granular_set_doc(granular))


def parse_granular_set(text: str) -> GranularSet:
    data = _load_json(text)
    if not isinstance(data, dict) or "levels" not in data or not isinstance(data["levels"], list):
        raise ParseError("expected an object with a 'levels' array")
    parts = [
        _partition_from(item, f"level {i}") for i, item in enumerate(data["levels"], start=1)
    ]
    return validate_granular(parts)


# ---------------------------------------------------------------------------
# approximations and sensitivity profiles


def approximation_pair_doc(pair: ApproximationPair, order: Sequence[str] | None = None) -> dict:
    return {
        "lower": object_set_doc(pair.lower, order),
        "upper": object_set_doc(pair.upper, order),
    }


def serialize_approximation_pair(pair: ApproximationPair, order: Sequence[str] | None = None) -> str:
    return dumps_canonical(approximation_pair_doc(pair, order))


def parse_approximation_pair(text: str) -> ApproximationPair:
    data = _load_json(text)
    if not isinstance(data, dict) or set(data) != {"lower", "upper"}:
        raise ParseError("expected an object with keys 'lower' and 'upper'")
    sets = {}
    for key in ("lower", "upper"):
        ids = data[key]
        if not isinstance(ids, list) or not all(isinstance(x, str) for x in ids):
            raise ParseError(f"'{key}' must be an array of object id strings")
        sets[key] = frozenset(ids)
    return ApproximationPair(sets["lower"], sets["upper"])


_SENSITIVITY_FIELDS = (
    "accuracy",
    "attribute_count",
    "boundary_size",
    "level_index",
    "lower_size",
    "upper_size",
)


def sensitivity_profile_doc(records: Iterable[SensitivityRecord]) -> list[dict]:
    return [
        {
            "accuracy": _real(r.accuracy),
            "attribute_count": r.attribute_count,
            "boundary_size": r.boundary_size,
            "level_index": r.level_index,
            "lower_size": r.lower_size,
            "upper_size": r.upper_size,
        }
        for r in records
    ]


def serialize_sensitivity_profile(records: Iterable[SensitivityRecord]) -> str:
    return dumps_canonical(sensitivity_profile_doc(records))


def parse_sensitivity_profile(text: str) -> list[SensitivityRecord]:
    data = _load_json(text)
    if not isinstance(data, list):
        raise ParseError("expected an array of sensitivity records")
    records = []
    for i, item in enumerate(data, start=1):
        where = f"record {i}"
        if not isinstance(item, dict) or set(item) != set(_SENSITIVITY_FIELDS):
            raise ParseError(f"{where}: expected keys {', '.join(_SENSITIVITY_FIELDS)}")
        for key in _SENSITIVITY_FIELDS:
            if key == "accuracy":
                continue
            if not isinstance(item[key], int) or isinstance(item[key], bool):
                raise ParseError(f"{where}: '{key}' must be an integer")
        records.append(
            SensitivityRecord(
                level_index=item["level_index"],
                attribute_count=item["attribute_count"],
                lower_size=item["lower_size"],
                upper_size=item["upper_size"],
                boundary_size=item["boundary_size"],
                accuracy=_number(item["accuracy"], where),
            )
        )
    return records
