"""Acceptance suite: every exit criterion, exact tolerances, one line each.

Each criterion runs as a single test that performs the full check at its
stated scale, asserts the stated runtime bound, and prints one PASS line
(visible under pytest -s; the -v test names mirror the criteria).
"""

import itertools
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from circorder.graphs import (
    Graph,
    complete_bipartite,
    cycle,
    is_caterpillar_forest,
    is_forest,
    is_linear_forest,
    is_outerplanar_oracle,
    is_isomorphic,
    path,
    rational_complete,
    rational_complete_below,
)
from circorder.circular import (
    CircularOrderedGraph,
    all_cyclic_sequences,
    avoids,
    catalog,
    circ_iso,
    has_consecutive_ordering,
    has_crossing_edges,
    make_ordered,
    satisfies_consecutiveness,
)
from circorder.chromatic import (
    chi_c_threshold_checks,
    chromatic_number,
    circular_chromatic_number,
    circular_chromatic_number_via_orientations,
    has_monotone_walk,
)
from circorder.constructive import order_outerplanar, order_tree, rational_complete_ordering, zigzag, is_zigzag
from circorder.families import (
    BUILTIN_FAMILY_NAMES,
    builtin_family,
    caterpillar_family,
    circular_arc_family,
    crossing_family,
    forest_family,
    gadget_family,
    linear_forest_family,
    monotone_walk_family,
    simple_cycle,
    simple_path,
)
from circorder.patterns import (
    ForbiddenFamily,
    OrderedPattern,
    lin_canonical,
    linearize,
    represented,
    straight_path,
)
from circorder.reduction import (
    CyclicOrderingInstance,
    build_reduction,
    embed_solution,
    extract_cyclic_order,
    generated_triples,
    solve_cyclic_ordering,
)
from circorder.search import (
    find_free_circular_ordering,
    find_free_linear_ordering,
    naive_find_free_circular_ordering,
)

from conftest import all_graphs_up_to, trees_up_to_iso


def _finish(num: int, name: str, t0: float, bound_seconds: float) -> None:
    elapsed = time.monotonic() - t0
    assert elapsed < bound_seconds, (
        f"criterion {num} took {elapsed:.1f}s, bound {bound_seconds}s"
    )
    print(f"[acceptance] criterion {num:02d} {name}: PASS ({elapsed:.1f}s < {bound_seconds:.0f}s)")


def test_c01_catalog_counts():
    t0 = time.monotonic()
    assert [len(catalog(n)) for n in (2, 3, 4)] == [2, 4, 22]
    _finish(1, "catalog counts 2/4/22", t0, 1.0)


def test_c02_walk_family_reproduction():
    t0 = time.monotonic()
    h4 = monotone_walk_family.__wrapped__(4)
    got = {m.canonical_key for m in h4.members}
    expect = {
        simple_cycle(3).canonical_key,
        simple_cycle(4).canonical_key,
        simple_path(4).canonical_key,
    }
    assert got == expect
    h3 = monotone_walk_family.__wrapped__(3)
    assert len(h3.members) == 1
    assert circ_iso(h3.members[0], make_ordered(path(2), (0, 1)))
    _finish(2, "computed walk antichains match the known ones", t0, 10.0)


def test_c03_circular_arc_equivalence():
    t0 = time.monotonic()
    fam = circular_arc_family()
    for g in all_graphs_up_to(7):
        assert find_free_circular_ordering(g, fam).found == has_consecutive_ordering(g)
    assert not find_free_circular_ordering(complete_bipartite(2, 3), fam).found
    assert find_free_circular_ordering(cycle(4), fam).found
    # the mechanism: ordering-by-ordering, consecutiveness = pattern avoidance
    for n in range(2, 6):
        for cog in catalog(n):
            assert satisfies_consecutiveness(cog) == avoids(cog, fam)
    _finish(3, "pattern-avoidance = consecutive-neighborhood orderings (n<=7)", t0, 300.0)


def test_c04_outerplanar_equivalence():
    t0 = time.monotonic()
    fam = crossing_family()
    for g in all_graphs_up_to(7):
        searched = find_free_circular_ordering(g, fam).found
        oracle = is_outerplanar_oracle(g)
        assert searched == oracle
        if oracle:
            cog = order_outerplanar(g)
            assert not has_crossing_edges(cog)
        else:
            with pytest.raises(ValueError):
                order_outerplanar(g)
    _finish(4, "crossing-free orderings = no forbidden minors (n<=7)", t0, 300.0)


def test_c05_forest_equivalence_and_tree_construction():
    t0 = time.monotonic()
    fam = forest_family()
    for g in all_graphs_up_to(7):
        assert find_free_circular_ordering(g, fam).found == is_forest(g)
    for n in range(1, 10):
        for t in trees_up_to_iso(n):
            for root in range(n):
                cog = order_tree(t, root)
                assert avoids(cog, fam)
                assert not has_crossing_edges(cog)
    _finish(5, "forest family = forests; tree arrangement verified (n<=9)", t0, 300.0)


def test_c06_linear_forest_and_caterpillar_equivalences():
    t0 = time.monotonic()
    lfam, cfam = linear_forest_family(), caterpillar_family()
    for g in all_graphs_up_to(7):
        assert find_free_circular_ordering(g, lfam).found == is_linear_forest(g)
        assert find_free_circular_ordering(g, cfam).found == is_caterpillar_forest(g)
    for k in range(4, 8):
        p = path(k)
        for seq in all_cyclic_sequences(k):
            cog = make_ordered(p, seq)
            assert is_zigzag(cog) == avoids(cog, lfam)
        assert is_zigzag(zigzag(k))
    _finish(6, "linear-forest and caterpillar families; zigzags (n<=7)", t0, 300.0)


def test_c07_circular_chromatic_cross_method():
    t0 = time.monotonic()
    for g in all_graphs_up_to(6):
        by_hom = circular_chromatic_number(g)
        by_orient = circular_chromatic_number_via_orientations(g)
        assert by_hom == by_orient
        chi = chromatic_number(g)
        assert chi - 1 < by_hom <= chi
    assert circular_chromatic_number(cycle(5)) == Fraction(5, 2)
    for p in range(2, 8):
        for q in range(1, p + 1):
            if gcd(p, q) == 1 and Fraction(p, q) >= 2:
                assert circular_chromatic_number(rational_complete(p, q)) == Fraction(p, q)
    _finish(7, "two chromatic routes agree exactly (n<=6)", t0, 600.0)


def test_c08_threshold_triple_equivalence():
    t0 = time.monotonic()
    for g in all_graphs_up_to(6):
        for k in (3, 4):
            triple = chi_c_threshold_checks(g, k)
            assert triple[0] == triple[1] == triple[2], (sorted(g.edges), k, triple)
        # the bound restated: value below k iff the walk family is avoidable
        for k in (3, 4):
            assert (circular_chromatic_number(g) < k) == find_free_circular_ordering(
                g, monotone_walk_family(k + 1)
            ).found
    _finish(8, "three-way threshold equivalence (n<=6, k=3,4)", t0, 900.0)


def test_c09_canonical_ordering_witnesses():
    t0 = time.monotonic()
    for m in (1, 2, 3):
        assert not has_monotone_walk(rational_complete_ordering(3 * m - 1, m), 4)
    mobius = Graph(8, frozenset(set(cycle(8).edges) | {(i, i + 4) for i in range(4)}))
    assert is_isomorphic(rational_complete_below(3, 3), mobius)
    _finish(9, "canonical orderings perform as predicted", t0, 1.0)


def test_c10_linearization_equivalence():
    t0 = time.monotonic()
    circular_names = [
        name for name in BUILTIN_FAMILY_NAMES if builtin_family(name).kind == "circular"
    ]
    hosts = all_graphs_up_to(6)
    for name in circular_names:
        fam = builtin_family(name)
        lin = ForbiddenFamily(f"lin-{name}", linearize(fam), "induced", "linear")
        for g in hosts:
            a = find_free_circular_ordering(g, fam).found
            b = find_free_linear_ordering(g, lin, "induced").found
            assert a == b, (name, sorted(g.edges))
    # the linearized circular-arc pattern equals two explicit linear patterns
    p1 = OrderedPattern(4, frozenset({(0, 2)}), frozenset({(0, 1), (2, 3)}), kind="linear")
    p2 = OrderedPattern(4, frozenset({(1, 3)}), frozenset({(1, 2), (0, 3)}), kind="linear")
    expected = {lin_canonical(lg).canonical_key for lg in represented(p1) + represented(p2)}
    got = {lg.canonical_key for lg in linearize(circular_arc_family())}
    assert got == expected
    _finish(10, "circular avoidance = linearized avoidance (n<=6)", t0, 600.0)


def _canonical_relation_sets(a_size: int, max_triples: int):
    """Representatives of triple sets up to ground-set relabeling.

    Returns the representatives plus the total number of instances they
    cover, which must equal the raw count (orbit sizes via stabilizers).
    """
    triples = sorted(itertools.permutations(range(a_size), 3))
    perms = list(itertools.permutations(range(a_size)))
    reps, covered = [], 0
    for r in range(min(max_triples, len(triples)) + 1):
        for combo in itertools.combinations(triples, r):
            base = tuple(sorted(combo))
            stabilizer = 0
            smaller = False
            for perm in perms:
                mapped = tuple(
                    sorted((perm[x], perm[y], perm[z]) for x, y, z in combo)
                )
                if mapped < base:
                    smaller = True
                    break
                if mapped == base:
                    stabilizer += 1
            if not smaller:
                reps.append(combo)
                covered += len(perms) // stabilizer
    return reps, covered


def test_c11_reduction_equivalence():
    t0 = time.monotonic()
    assert len(gadget_family().members) == 59
    fam = gadget_family()
    names = "abcde"
    total_checked = 0
    for a_size in range(0, 6):
        reps, covered = _canonical_relation_sets(a_size, 3)
        raw_total = sum(
            _comb(a_size * (a_size - 1) * (a_size - 2), r)
            for r in range(min(3, a_size * (a_size - 1) * (a_size - 2)) + 1)
        )
        assert covered == raw_total  # the representatives cover every instance
        elements = tuple(names[:a_size])
        for combo in reps:
            instance = CyclicOrderingInstance(
                elements, tuple(tuple(names[i] for i in t) for t in combo)
            )
            red = build_reduction(instance)
            assert red.graph.n == a_size + 3 * len(combo)
            assert red.graph.edge_count == 9 * len(combo)
            order = solve_cyclic_ordering(instance)
            found = find_free_circular_ordering(
                red.graph, fam, deterministic=False, max_n=red.graph.n
            )
            assert (order is not None) == found.found, instance
            if order is not None:
                witness = embed_solution(red, instance, order)
                extracted = extract_cyclic_order(red, instance, witness)
                assert set(instance.triples) <= generated_triples(extracted)
                back = extract_cyclic_order(red, instance, found.witness)
                assert set(instance.triples) <= generated_triples(back)
            total_checked += 1
    assert total_checked > 400
    _finish(11, f"reduction equivalence on {total_checked} instance classes", t0, 600.0)


def _comb(n, r):
    if r < 0 or r > n:
        return 0
    out = 1
    for i in range(r):
        out = out * (n - i) // (i + 1)
    return out


def test_c12_colorability_orderings():
    t0 = time.monotonic()
    for k in (1, 2, 3):
        fam = ForbiddenFamily("sp", (straight_path(k + 1),), "subgraph", "linear")
        for g in all_graphs_up_to(6):
            expected = chromatic_number(g) <= k
            assert find_free_linear_ordering(g, fam).found == expected
    _finish(12, "straight-path-free orderings = colorability (n<=6)", t0, 300.0)


def test_c13_randomized_search_soundness():
    t0 = time.monotonic()
    rng = random.Random(2024)
    circular_names = [
        name for name in BUILTIN_FAMILY_NAMES if builtin_family(name).kind == "circular"
    ]
    fams = [builtin_family(name) for name in circular_names]
    for _ in range(10_000):
        n = rng.randint(1, 6)
        density = rng.choice((0.2, 0.35, 0.5, 0.7))
        edges = frozenset(
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < density
        )
        g = Graph(n, edges)
        fam = rng.choice(fams)
        fast = find_free_circular_ordering(g, fam)
        slow = naive_find_free_circular_ordering(g, fam)
        assert fast.found == slow.found
        if fast.found:
            assert avoids(CircularOrderedGraph(g, fast.witness), fam)
            assert fast.witness == slow.witness  # deterministic = lexicographic least
    _finish(13, "10000 randomized trials match the naive oracle", t0, 600.0)
