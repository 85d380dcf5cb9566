"""Command-line surface: one subcommand per library capability.

Standard output carries exactly one canonical JSON document; diagnostics
go to standard error as ``error: <reason>``.  Exit codes: 0 on success,
1 when a precondition or invariant is violated (domain error), 2 when
input cannot be parsed or the invocation itself is malformed.

Flags taking structured values (``--chain``, ``--targets``, ``--dist``)
accept either a file path or inline JSON; an argument whose first
non-space character is ``[`` or ``{`` is read as inline JSON.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .errors import DomainError, ParseError
from .infosys import (
    approximation_pair,
    graded_approximations,
    granular_from_chain,
    indiscernibility_partition,
    sensitivity_profile,
)
from .intervals import fuse, graded_fusion, random_graded, sample
from .simulate import SimConfig, simulate_rounds


def _read_file(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _read_source(value: str) -> str:
    """A structured flag value: inline JSON if it looks like JSON, else a path."""
    if value.lstrip()[:1] in ("[", "{"):
        return value
    return _read_file(value)


def _split_names(value: str, what: str) -> list[str]:
    """A comma-separated name list; the empty string denotes the empty list."""
    if value == "":
        return []
    names = []
    for token in value.split(","):
        if not token or token != token.strip():
            raise ParseError(f"{what}: bad token {token!r}")
        names.append(token)
    return names


def _cmd_fuse(args: argparse.Namespace):
    intervals = formats.parse_intervals(_read_file(args.input), args.format)
    return formats.fusion_result_doc(fuse(intervals, args.faults))


def _cmd_graded(args: argparse.Namespace):
    intervals = formats.parse_intervals(_read_file(args.input), args.format)
    return formats.graded_intervals_doc(graded_fusion(intervals, args.fmin, args.fmax))


def _cmd_random(args: argparse.Namespace):
    intervals = formats.parse_intervals(_read_file(args.input), args.format)
    dist = formats.parse_fault_distribution(_read_source(args.dist))
    result = random_graded(intervals, dist)
    doc = formats.interval_distribution_doc(result)
    if args.sample is not None:
        if args.sample < 1:
            raise DomainError("need at least one sample")
        doc["samples"] = [
            formats.fusion_result_doc(sample(result, args.seed + i)) for i in range(args.sample)
        ]
    return doc


def _cmd_partition(args: argparse.Namespace):
    table = formats.parse_table(_read_file(args.table))
    attrs = _split_names(args.attrs, "attribute list")
    return formats.partition_doc(indiscernibility_partition(table, attrs))


def _cmd_granulate(args: argparse.Namespace):
    table = formats.parse_table(_read_file(args.table))
    chain = formats.parse_chain(_read_source(args.chain))
    doc = formats.granular_set_doc(granular_from_chain(table, chain))
    doc["granular"] = True
    return doc


def _cmd_approx(args: argparse.Namespace):
    table = formats.parse_table(_read_file(args.table))
    attrs = _split_names(args.attrs, "attribute list")
    target = _split_names(args.target, "target list")
    pair = approximation_pair(table, attrs, target)
    return formats.approximation_pair_doc(pair, order=table.objects)


def _cmd_graded_approx(args: argparse.Namespace):
    table = formats.parse_table(_read_file(args.table))
    attrs = _split_names(args.attrs, "attribute list")
    targets = formats.parse_graded_family(_read_source(args.targets))
    lowers, uppers = graded_approximations(table, attrs, targets)
    return {
        "lower": formats.graded_family_doc(lowers, order=table.objects),
        "upper": formats.graded_family_doc(uppers, order=table.objects),
    }


def _cmd_sensitivity(args: argparse.Namespace):
    table = formats.parse_table(_read_file(args.table))
    chain = formats.parse_chain(_read_source(args.chain))
    target = _split_names(args.target, "target list")
    return formats.sensitivity_profile_doc(sensitivity_profile(table, chain, target))


def _cmd_simulate(args: argparse.Namespace):
    if args.rounds < 1:
        raise DomainError("need at least one round")
    config = SimConfig(
        num_sensors=args.sensors,
        truth=args.truth,
        correct_halfwidth_max=args.halfwidth,
        num_faulty=args.faulty,
        fault_offset_min=args.offset,
        seed=args.seed,
    )
    rounds = []
    for i, outcome in enumerate(simulate_rounds(config, args.rounds)):
        rounds.append(
            {
                "round": i,
                "faulty": sorted(outcome.faulty_indices),
                "intervals": formats.intervals_doc(outcome.intervals),
                "fused": formats.graded_intervals_doc(outcome.fused),
                "contains_truth": list(outcome.truth_containment),
            }
        )
    return {
        "config": {
            "sensors": config.num_sensors,
            "truth": formats._real(config.truth),
            "halfwidth": formats._real(config.correct_halfwidth_max),
            "faulty": config.num_faulty,
            "offset": formats._real(config.fault_offset_min),
            "seed": config.seed,
        },
        "rounds": rounds,
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsets",
        description="Graded sets, granular sets, interval fusion, and rough approximations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def interval_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="interval file (CSV 'lo,hi' or JSON)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("fuse", help="fuse interval measurements under a fault budget")
    interval_input(p)
    p.add_argument("--faults", type=int, required=True)
    p.set_defaults(handler=_cmd_fuse)

    p = sub.add_parser("graded", help="fused intervals over a range of fault budgets")
    interval_input(p)
    p.add_argument("--fmin", type=int, required=True)
    p.add_argument("--fmax", type=int, required=True)
    p.set_defaults(handler=_cmd_graded)

    p = sub.add_parser("random", help="push a fault-count pmf through fusion")
    interval_input(p)
    p.add_argument("--dist", required=True, help="JSON pmf over fault counts (path or inline)")
    p.add_argument("--sample", type=int, help="also draw this many results")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_random)

    p = sub.add_parser("partition", help="indiscernibility partition of a table")
    p.add_argument("--table", required=True, help="information table CSV")
    p.add_argument("--attrs", required=True, help="comma-separated attribute names")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("granulate", help="granular set from a nested attribute chain")
    p.add_argument("--table", required=True, help="information table CSV")
    p.add_argument("--chain", required=True, help="JSON attribute chain (path or inline)")
    p.set_defaults(handler=_cmd_granulate)

    p = sub.add_parser("approx", help="rough lower/upper approximation of a target set")
    p.add_argument("--table", required=True, help="information table CSV")
    p.add_argument("--attrs", required=True, help="comma-separated attribute names")
    p.add_argument("--target", required=True, help="comma-separated object ids")
    p.set_defaults(handler=_cmd_approx)

    p = sub.add_parser("graded-approx", help="approximate every level of a nested target chain")
    p.add_argument("--table", required=True, help="information table CSV")
    p.add_argument("--attrs", required=True, help="comma-separated attribute names")
    p.add_argument("--targets", required=True, help="JSON nested target sets (path or inline)")
    p.set_defaults(handler=_cmd_graded_approx)

    p = sub.add_parser("sensitivity", help="approximation quality along an attribute chain")
    p.add_argument("--table", required=True, help="information table CSV")
    p.add_argument("--chain", required=True, help="JSON attribute chain (path or inline)")
    p.add_argument("--target", required=True, help="comma-separated object ids")
    p.set_defaults(handler=_cmd_sensitivity)

    p = sub.add_parser("simulate", help="seeded fault-injection rounds with containment report")
    p.add_argument("--sensors", type=int, required=True)
    p.add_argument("--faulty", type=int, required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--truth", type=float, default=0.0)
    p.add_argument("--halfwidth", type=float, default=1.0, help="max half-width of correct intervals")
    p.add_argument("--offset", type=float, default=2.5, help="min center displacement of faulty intervals")
    p.set_defaults(handler=_cmd_simulate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        doc = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(formats.dumps_canonical(doc))
    return 0


run = main
