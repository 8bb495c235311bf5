"""Command line for the one-shot dataset conversion."""

from __future__ import annotations

import argparse
import sys

from .convert import EXPECTED_COUNTS, ConvertError, convert


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="planetoid-convert",
        description="Convert public Planetoid benchmark files into the neutral "
                    "TSV dataset format")
    parser.add_argument("--src", required=True, help="directory with the upstream files")
    parser.add_argument("--dst", required=True, help="output root; the dataset is "
                        "written to DST/DATASET")
    parser.add_argument("--dataset", required=True, choices=sorted(EXPECTED_COUNTS),
                        help="which dataset to convert")
    args = parser.parse_args(argv)
    try:
        counts = convert(args.src, args.dst, args.dataset)
    except ConvertError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    sys.stdout.write(f"{args.dataset}: {counts['n_nodes']} nodes, "
                     f"{counts['n_edges']:g} edges, {counts['n_classes']} classes, "
                     f"{counts['n_features']} features\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
