#!/usr/bin/env python3
"""Tabulate circularly ordered graph classes by vertex and edge count."""

import argparse
from collections import Counter

from circorder.circular import catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        reps = catalog(n)
        by_edges = Counter(cog.graph.edge_count for cog in reps)
        profile = " ".join(f"{m}:{by_edges[m]}" for m in sorted(by_edges))
        print(f"n={n}: {len(reps)} classes  ({profile})")


if __name__ == "__main__":
    main()
