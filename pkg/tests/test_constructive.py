import pytest

from circorder.graphs import (
    Graph,
    complete,
    complete_bipartite,
    claw,
    cycle,
    induced_subgraph,
    is_caterpillar_forest,
    is_linear_forest,
    path,
    subdivided_claw,
)
from circorder.circular import (
    all_cyclic_sequences,
    avoids,
    circ_iso,
    has_crossing_edges,
    make_ordered,
    restrict,
)
from circorder.constructive import (
    _bfs_plan,
    is_zigzag,
    lift_ordering,
    order_caterpillar,
    order_forest,
    order_linear_forest,
    order_outerplanar,
    order_tree,
    path_order,
    rational_complete_ordering,
    zigzag,
    zigzag_z,
    zigzag_z_star,
)
from circorder.families import (
    caterpillar_family,
    crossing_family,
    forest_family,
    linear_forest_family,
)
from circorder.chromatic import has_monotone_walk

from conftest import trees_up_to_iso


class TestOrderTree:
    def test_single_vertex(self):
        assert order_tree(Graph(1), 0).order.seq == (0,)

    def test_claw_rooted_at_center(self):
        # each leaf lands behind the root, giving (center, 1, 2, 3)
        assert order_tree(claw(), 0).order.seq == (0, 1, 2, 3)

    def test_rejects_non_trees(self):
        with pytest.raises(ValueError):
            order_tree(cycle(4), 0)
        with pytest.raises(ValueError):
            order_tree(Graph(2), 0)  # disconnected

    def test_all_small_trees_all_roots(self):
        fam = forest_family()
        for n in range(1, 9):
            for t in trees_up_to_iso(n):
                for root in range(n):
                    cog = order_tree(t, root)
                    assert avoids(cog, fam)
                    assert not has_crossing_edges(cog)

    def test_prefix_stability(self):
        # the arrangement of the first k processed vertices equals the
        # algorithm's output on the induced prefix tree
        for t in trees_up_to_iso(7):
            order, _ = _bfs_plan(t, 0)
            full = order_tree(t, 0)
            for k in range(1, t.n + 1):
                prefix = sorted(order[:k])
                relabel = {v: i for i, v in enumerate(prefix)}
                sub = induced_subgraph(t, prefix)
                again = order_tree(sub, relabel[0])
                restricted = restrict(full, prefix)
                assert restricted.order == again.order

    def test_forest_arrangement(self):
        g = Graph(6, frozenset({(0, 1), (1, 2), (3, 4)}))
        cog = order_forest(g)
        assert avoids(cog, forest_family())


class TestZigzag:
    def test_four_zigzags_are_the_two_known_classes(self):
        assert circ_iso(zigzag(4), zigzag_z()) or circ_iso(zigzag(4), zigzag_z_star())

    def test_the_two_classes_are_dual_and_distinct(self):
        from circorder.circular import dual

        assert not circ_iso(zigzag_z(), zigzag_z_star())
        assert circ_iso(dual(zigzag_z()), zigzag_z_star())

    @pytest.mark.parametrize("k", [4, 5, 6, 7])
    def test_zigzag_iff_linear_forest_free(self, k):
        fam = linear_forest_family()
        p = path(k)
        for seq in all_cyclic_sequences(k):
            cog = make_ordered(p, seq)
            assert is_zigzag(cog) == avoids(cog, fam)

    def test_simple_path_is_not_a_zigzag(self):
        from circorder.families import simple_path

        assert not is_zigzag(simple_path(5))

    def test_windows_are_zigzags(self):
        zz = zigzag(7)
        keys = {zigzag_z().canonical_key, zigzag_z_star().canonical_key}
        for i in range(4):
            assert restrict(zz, range(i, i + 4)).canonical_key in keys

    def test_rejects_non_paths(self):
        with pytest.raises(ValueError):
            is_zigzag(make_ordered(cycle(4), range(4)))
        with pytest.raises(ValueError):
            path_order(claw())

    def test_small_paths(self):
        assert zigzag(1).order.seq == (0,)
        assert is_zigzag(zigzag(2)) and is_zigzag(zigzag(3))


class TestOrderCaterpillar:
    def test_star(self):
        cog = order_caterpillar(complete_bipartite(1, 4))
        assert avoids(cog, caterpillar_family())

    def test_plain_path_reduces_to_its_zigzag(self):
        assert order_caterpillar(path(6)).order == zigzag(6).order

    def test_every_small_caterpillar(self):
        fam = caterpillar_family()
        for n in range(1, 9):
            for t in trees_up_to_iso(n):
                if is_caterpillar_forest(t):
                    assert avoids(order_caterpillar(t), fam)

    def test_disconnected_input(self):
        g = Graph(7, frozenset({(0, 1), (1, 2), (1, 3), (4, 5), (5, 6)}))
        assert avoids(order_caterpillar(g), caterpillar_family())

    def test_rejects_non_caterpillars(self):
        with pytest.raises(ValueError):
            order_caterpillar(subdivided_claw())
        with pytest.raises(ValueError):
            order_caterpillar(cycle(5))

    def test_linear_forest_ordering(self):
        g = Graph(7, frozenset({(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)}))
        assert is_linear_forest(g)
        assert avoids(order_linear_forest(g), linear_forest_family())


class TestOrderOuterplanar:
    def test_cycle_keeps_its_own_order(self):
        assert order_outerplanar(cycle(5)).order.seq == (0, 1, 2, 3, 4)

    def test_k4_minus_an_edge(self):
        g = Graph(4, frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)}))
        cog = order_outerplanar(g)
        assert not has_crossing_edges(cog)

    def test_trees_get_crossing_free_orders(self):
        fam = crossing_family()
        for n in range(1, 9):
            for t in trees_up_to_iso(n):
                assert avoids(order_outerplanar(t), fam)

    def test_rejects_k4(self):
        with pytest.raises(ValueError):
            order_outerplanar(complete(4))

    def test_rejects_k23(self):
        with pytest.raises(ValueError):
            order_outerplanar(complete_bipartite(2, 3))


class TestRationalCompleteOrdering:
    def test_natural_sequence(self):
        assert rational_complete_ordering(5, 2).order.seq == (0, 1, 2, 3, 4)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_no_monotone_4_walk(self, m):
        cog = rational_complete_ordering(3 * m - 1, m)
        assert not has_monotone_walk(cog, 4)

    def test_triangle_five_walk_value(self):
        # golden value fixed by the walk checker: the natural triangle
        # ordering admits a monotone 4-walk (it closes once around) but no
        # 5-walk, since only the endpoints may coincide
        cog = rational_complete_ordering(3, 1)
        assert has_monotone_walk(cog, 4)
        assert not has_monotone_walk(cog, 5)

    def test_complete_graph_walks_exist(self):
        assert has_monotone_walk(rational_complete_ordering(4, 1), 4)


class TestLiftOrdering:
    def test_identity_hom(self):
        target = rational_complete_ordering(5, 2)
        lifted = lift_ordering(target.graph, list(range(5)), target)
        assert circ_iso(lifted, target)

    def test_blocks_are_contiguous(self):
        big, small = cycle(10), cycle(5)
        hom = [v % 5 for v in range(10)]
        target = make_ordered(small, range(5))
        lifted = lift_ordering(big, hom, target)
        seq = lifted.order.seq
        for x in range(5):
            positions = sorted(seq.index(v) for v in range(10) if hom[v] == x)
            assert positions[1] - positions[0] == 1 or set(positions) == {0, 9}

    def test_double_cover_of_the_pentagram(self):
        # the 10-cycle maps onto the rational complete graph on 5 vertices;
        # the lifted ordering inherits walk-freeness
        big = cycle(10)
        hom = [(2 * v) % 5 for v in range(10)]
        target = rational_complete_ordering(5, 2)
        lifted = lift_ordering(big, hom, target)
        assert not has_monotone_walk(lifted, 4)

    def test_rejects_non_homomorphisms(self):
        with pytest.raises(ValueError):
            lift_ordering(cycle(10), [v % 5 for v in range(10)], rational_complete_ordering(5, 2))
