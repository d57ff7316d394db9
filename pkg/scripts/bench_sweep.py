"""Comparison-count sweep across all four families, written as CSV on stdout.

Thin driver over the bench subcommand so the default research sweep is one
command; pass --topology/--pattern to override the grid.
"""

import argparse
import sys

from dagsort.cli import main as cli_main

DEFAULT_SPECS = ",".join(
    [f"star:{n}" for n in (4, 16, 64, 256, 1024)]
    + [f"path:{n}" for n in (4, 16, 64, 256, 1024)]
    + [f"grid:2:{s}" for s in (2, 4, 8, 16, 32)]
    + [f"hypercube:{k}" for k in range(1, 11)]
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--topology", default=DEFAULT_SPECS)
    parser.add_argument("--pattern", default="random,sorted,reverse,equal")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    return cli_main(
        ["bench", "--topology", args.topology, "--pattern", args.pattern, "--seed", str(args.seed)]
    )


if __name__ == "__main__":
    sys.exit(main())
