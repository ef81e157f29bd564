"""Frozen expected outputs: family dumps, reduction sizes, walk values."""

from pathlib import Path

import pytest

from circorder import cli
from circorder.chromatic import has_monotone_walk
from circorder.constructive import rational_complete_ordering
from circorder.reduction import CyclicOrderingInstance, build_reduction

GOLDEN_DIR = Path(__file__).parent / "goldens"

GOLDEN_FAMILIES = [
    "circular-arc",
    "crossing",
    "linear-forest",
    "caterpillar-forest",
    "forest",
    "walk-3",
    "walk-4",
    "walk-5",
    "straight-walk-4",
    "straight-walk-5",
    "gadget",
]


@pytest.mark.parametrize("name", GOLDEN_FAMILIES)
def test_family_dump_matches_golden(name, capsys):
    assert cli.run(["families", "dump", name]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN_DIR / f"family_{name}.txt").read_text()


def test_reduction_sizes_match_golden():
    for line in (GOLDEN_DIR / "reduction_sizes.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        elements, r, n, m = line.split()
        names = tuple(elements.split(","))
        triples = _stock_triples(names, int(r))
        red = build_reduction(CyclicOrderingInstance(names, triples))
        assert red.graph.n == int(n)
        assert red.graph.edge_count == int(m)


def _stock_triples(names, count):
    base = [
        (names[0], names[1], names[2]),
        (names[1 % len(names)], names[2 % len(names)], names[3 % len(names)])
        if len(names) > 3
        else (names[0], names[2], names[1]),
        (names[-3], names[-2], names[-1]),
    ]
    return tuple(base[:count])


def test_walk_values_match_golden():
    for line in (GOLDEN_DIR / "walk_values.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        _, p, q, k, value = line.split()
        cog = rational_complete_ordering(int(p), int(q))
        assert has_monotone_walk(cog, int(k)) == (value == "True")
