#!/usr/bin/env python3
"""Emit the nested-commutator dilatation table as CSV.

Usage: python scripts/lcs_sweep.py [--max-k K] [--mu M] > table.csv
"""

import argparse
import sys

from multitwist import search


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=10)
    parser.add_argument("--mu", type=int, default=64)
    parser.add_argument("--precision-bits", type=int, default=60)
    args = parser.parse_args()
    rows = search.lcs_table(args.max_k, args.mu, args.precision_bits)
    sys.stdout.write(search.lcs_csv(rows))


if __name__ == "__main__":
    main()
