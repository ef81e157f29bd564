import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circorder.graphs import Graph, complete, cycle, path, ordering_gadget
from circorder.circular import CircularOrderedGraph, avoids, circ_iso, make_ordered
from circorder.families import (
    caterpillar_family,
    circular_arc_family,
    crossing_family,
    forest_family,
    gadget_family,
    gadget_ordering,
    linear_forest_family,
    monotone_walk_family,
    straight_walk_family,
)
from circorder.patterns import ForbiddenFamily, lin_avoids, straight_path
from circorder.search import (
    all_free_orderings,
    count_free_orderings,
    find_free_circular_ordering,
    find_free_linear_ordering,
    naive_find_free_circular_ordering,
    naive_find_free_linear_ordering,
)

from conftest import all_graphs_up_to

FAMILIES = [
    circular_arc_family,
    crossing_family,
    linear_forest_family,
    caterpillar_family,
    forest_family,
    lambda: monotone_walk_family(4),
]


def random_graph(rng, n):
    edges = frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45
    )
    return Graph(n, edges)


class TestCircularSearch:
    def test_cycle_has_no_forest_free_ordering(self):
        out = find_free_circular_ordering(cycle(4), forest_family())
        assert not out.found and out.exhaustive and out.witness is None

    def test_path_witness_is_a_zigzag(self):
        from circorder.constructive import is_zigzag

        out = find_free_circular_ordering(path(4), linear_forest_family())
        assert out.found
        assert is_zigzag(CircularOrderedGraph(path(4), out.witness))

    def test_empty_family_yields_the_identity(self):
        out = find_free_circular_ordering(cycle(5), [])
        assert out.found and out.witness.seq == (0, 1, 2, 3, 4)

    def test_witness_is_lexicographically_least(self):
        # deterministic mode explores cut-at-0 sequences in ascending order,
        # exactly like the naive enumeration
        rng = random.Random(3)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 6))
            fam = rng.choice(FAMILIES)()
            a = find_free_circular_ordering(g, fam)
            b = naive_find_free_circular_ordering(g, fam)
            assert a.found == b.found
            if a.found:
                assert a.witness == b.witness

    def test_heuristic_mode_preserves_the_answer(self):
        rng = random.Random(4)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 6))
            fam = rng.choice(FAMILIES)()
            a = find_free_circular_ordering(g, fam)
            b = find_free_circular_ordering(g, fam, deterministic=False)
            assert a.found == b.found
            if a.found:
                assert avoids(CircularOrderedGraph(g, b.witness), fam)

    def test_determinism_across_runs(self):
        g = random_graph(random.Random(5), 6)
        fam = forest_family()
        runs = [find_free_circular_ordering(g, fam) for _ in range(3)]
        assert len({(r.found, r.witness, r.nodes_explored) for r in runs}) == 1

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            find_free_circular_ordering(Graph(10), [])
        find_free_circular_ordering(Graph(10), [], max_n=10)

    def test_family_kind_checked(self):
        with pytest.raises(ValueError):
            find_free_circular_ordering(path(3), straight_walk_family(4))


class TestLinearSearch:
    def test_triangle_vs_increasing_path(self):
        fam = ForbiddenFamily("p3", (straight_path(3),), "subgraph", "linear")
        assert not find_free_linear_ordering(complete(3), fam).found

    def test_bipartite_graphs_avoid_increasing_paths(self):
        fam = ForbiddenFamily("p3", (straight_path(3),), "subgraph", "linear")
        for g in all_graphs_up_to(6):
            two_colorable = _is_bipartite(g)
            assert find_free_linear_ordering(g, fam).found == two_colorable

    def test_c5_avoids_straight_walk_4(self):
        assert find_free_linear_ordering(cycle(5), straight_walk_family(4)).found

    def test_agrees_with_naive(self):
        rng = random.Random(6)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 5))
            fam = random.choice(
                [straight_walk_family(4), straight_walk_family(5)]
            )
            a = find_free_linear_ordering(g, fam)
            b = naive_find_free_linear_ordering(g, fam)
            assert a.found == b.found
            if a.found:
                assert a.witness.order == b.witness.order

    def test_witness_reverified(self):
        out = find_free_linear_ordering(cycle(5), straight_walk_family(4))
        assert lin_avoids(out.witness, straight_walk_family(4))


def _is_bipartite(g: Graph) -> bool:
    color = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


class TestCounting:
    def test_triangle_with_no_constraints(self):
        assert count_free_orderings(complete(3), []) == 2

    def test_gadget_admits_exactly_the_canonical_class(self):
        wits = all_free_orderings(ordering_gadget(), gadget_family())
        assert len(wits) == 2
        for w in wits:
            assert circ_iso(
                CircularOrderedGraph(ordering_gadget(), w), gadget_ordering()
            )

    def test_single_edge_with_oversized_family(self):
        assert count_free_orderings(path(2), forest_family()) == 1

    def test_count_matches_naive_enumeration(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 5))
            fam = rng.choice(FAMILIES)()
            naive = sum(
                1
                for seq in _cut_sequences(g.n)
                if avoids(make_ordered(g, seq), fam)
            )
            assert count_free_orderings(g, fam) == naive


def _cut_sequences(n):
    if n == 0:
        return [()]
    return [(0,) + rest for rest in itertools.permutations(range(1, n))]


class TestExhaustiveAgreement:
    def test_every_class_every_family(self):
        # complete agreement with generate-and-test over every graph class
        # on up to six vertices, for each of the six concrete families
        for g in all_graphs_up_to(6):
            for factory in FAMILIES:
                fam = factory()
                assert (
                    find_free_circular_ordering(g, fam).found
                    == naive_find_free_circular_ordering(g, fam).found
                )

    def test_seven_vertex_random_agreement(self):
        rng = random.Random(17)
        for _ in range(50):
            g = random_graph(rng, 7)
            fam = rng.choice(FAMILIES)()
            a = find_free_circular_ordering(g, fam)
            b = naive_find_free_circular_ordering(g, fam)
            assert a.found == b.found
            if a.found:
                assert a.witness == b.witness


class TestSoundness:
    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 6), st.randoms(use_true_random=False))
    def test_random_witnesses_verify(self, n, rng):
        g = random_graph(rng, n)
        fam = rng.choice(FAMILIES)()
        out = find_free_circular_ordering(g, fam)
        if out.found:
            assert avoids(CircularOrderedGraph(g, out.witness), fam)
        else:
            assert out.exhaustive
            assert not naive_find_free_circular_ordering(g, fam).found
