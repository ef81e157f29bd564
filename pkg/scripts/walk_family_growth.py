#!/usr/bin/env python3
"""Print the computed monotone-walk antichains and how fast they grow.

The k=4 family is the known triple (triangle, simple 4-cycle, simple
4-path); beyond that the antichain sizes are computed, not tabulated
anywhere, so this doubles as a small experiment.
"""

import argparse
from collections import Counter

from circorder.families import monotone_walk_family


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=6)
    args = ap.parse_args()
    for k in range(3, args.max_k + 1):
        fam = monotone_walk_family(k)
        sizes = Counter(m.n for m in fam.members)
        profile = ", ".join(f"{sizes[n]} on {n} vertices" for n in sorted(sizes))
        print(f"k={k}: {len(fam.members)} minimal members ({profile})")


if __name__ == "__main__":
    main()
