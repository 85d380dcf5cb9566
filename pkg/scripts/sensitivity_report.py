"""Approximation quality of a target set along a growing attribute chain.

Reads an information table (CSV) and a nested attribute chain (JSON),
then prints one row per chain level: lower/upper approximation sizes,
boundary size, and accuracy.  Lower sizes can only grow and upper sizes
only shrink as attributes are added, so the table doubles as a quick
sanity check on new data.

Usage:
    python scripts/sensitivity_report.py \
        --table tests/fixtures/sample_table.csv \
        --chain tests/fixtures/attr_chain.json \
        --target O1,O2,O3
"""

import argparse
import sys
from pathlib import Path

from gsets import sensitivity_profile
from gsets.formats import parse_chain, parse_table


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--table", required=True)
    parser.add_argument("--chain", required=True)
    parser.add_argument("--target", required=True, help="comma-separated object ids")
    args = parser.parse_args(argv)

    table = parse_table(Path(args.table).read_text())
    chain = parse_chain(Path(args.chain).read_text())
    target = args.target.split(",") if args.target else []

    records = sensitivity_profile(table, chain, target)
    print(f"table: {len(table.objects)} objects x {len(table.attributes)} attributes")
    print(f"target: {{{args.target}}}")
    print(f"{'level':>5}  {'attrs':>5}  {'lower':>5}  {'upper':>5}  {'boundary':>8}  {'accuracy':>8}")
    for r in records:
        print(
            f"{r.level_index:>5}  {r.attribute_count:>5}  {r.lower_size:>5}  "
            f"{r.upper_size:>5}  {r.boundary_size:>8}  {r.accuracy:>8.3f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
