"""Construction of every named forbidden family and named ordered graph.

Fixed families (circular, induced semantics): the circular-arc pattern
expansion, the crossing-edge closure, the linear-forest and caterpillar
sets, and the seven-member forest set.  Computed families: the antichain of
minimal monotone-walk images on k vertices (characterizing circular chromatic
number below k-1) and the 59 off-canonical orderings of the six-vertex
ordering gadget.  Linear families with subgraph semantics are generated by
straight paths and cycles.
"""

from functools import lru_cache

from .graphs import Graph, claw, cycle, path, ordering_gadget
from .circular import (
    CircularOrderedGraph,
    all_cyclic_sequences,
    catalog,
    contains_induced,
    make_ordered,
)
from .patterns import (
    ForbiddenFamily,
    OrderedPattern,
    dedupe_members,
    expand_pattern_family,
    spanning_supergraph_closure,
    straight_cycle,
    straight_path,
    shifted_straight_path,
)

__all__ = [
    "ForbiddenFamily",
    "simple_path",
    "simple_cycle",
    "c5_star",
    "crossed_two_edges",
    "crossed_cycle4",
    "crossed_path4",
    "claw_ordering",
    "circular_arc_pattern",
    "circular_arc_family",
    "crossing_family",
    "linear_forest_family",
    "caterpillar_family",
    "forest_family",
    "monotone_walk_family",
    "straight_walk_family",
    "gadget_ordering",
    "gadget_family",
    "builtin_family",
    "BUILTIN_FAMILY_NAMES",
]

MAX_WALK_FAMILY = 6


def simple_path(k: int) -> CircularOrderedGraph:
    """Path on k vertices read cyclically in its natural order."""
    return make_ordered(path(k), range(k))


def simple_cycle(k: int) -> CircularOrderedGraph:
    """Cycle on k vertices read cyclically in its natural order."""
    return make_ordered(cycle(k), range(k))


def c5_star() -> CircularOrderedGraph:
    """The five-cycle arranged so its edges form the pentagram."""
    return make_ordered(cycle(5), (0, 3, 1, 4, 2))


def crossed_two_edges() -> CircularOrderedGraph:
    """Two disjoint edges interleaved in the cyclic sequence."""
    return make_ordered(Graph(4, frozenset({(0, 2), (1, 3)})), range(4))


def crossed_cycle4() -> CircularOrderedGraph:
    """The four-cycle ordered so that one pair of its edges crosses."""
    return make_ordered(Graph(4, frozenset({(0, 1), (0, 2), (1, 3), (2, 3)})), range(4))


def crossed_path4() -> CircularOrderedGraph:
    """The four-path ordered so that its end edges cross."""
    return make_ordered(Graph(4, frozenset({(0, 2), (0, 3), (1, 3)})), range(4))


def claw_ordering() -> CircularOrderedGraph:
    """The unique circular ordering of the claw (center 0)."""
    return make_ordered(claw(), range(4))


# ---------------------------------------------------------------------------
# fixed circular families

def circular_arc_pattern() -> OrderedPattern:
    """Four cyclically placed vertices: an edge across, a non-neighbor behind
    each endpoint.  Orderings avoiding every completion are exactly the
    neighborhood-consecutive ones."""
    return OrderedPattern(
        4,
        required=frozenset({(1, 3)}),
        forbidden=frozenset({(0, 3), (1, 2)}),
        kind="cyclic",
    )


@lru_cache(maxsize=None)
def circular_arc_family() -> ForbiddenFamily:
    fam = expand_pattern_family("circular-arc", circular_arc_pattern())
    assert len(fam) == 6
    return fam


@lru_cache(maxsize=None)
def crossing_family() -> ForbiddenFamily:
    """Spanning supergraphs of two crossed edges; avoiding = no crossing edges."""
    return spanning_supergraph_closure(crossed_two_edges(), "crossing")


@lru_cache(maxsize=None)
def linear_forest_family() -> ForbiddenFamily:
    members = dedupe_members(
        [
            simple_cycle(3),
            simple_cycle(4),
            crossed_cycle4(),
            simple_path(4),
            crossed_path4(),
            claw_ordering(),
        ]
    )
    assert len(members) == 6
    return ForbiddenFamily("linear-forest", members)


@lru_cache(maxsize=None)
def caterpillar_family() -> ForbiddenFamily:
    members = dedupe_members(
        [
            simple_cycle(3),
            simple_cycle(4),
            crossed_cycle4(),
            simple_path(4),
            crossed_path4(),
        ]
    )
    assert len(members) == 5
    return ForbiddenFamily("caterpillar-forest", members)


@lru_cache(maxsize=None)
def forest_family() -> ForbiddenFamily:
    members = dedupe_members(
        [
            simple_cycle(3),
            simple_cycle(4),
            crossed_cycle4(),
            crossed_two_edges(),
            crossed_path4(),
            simple_cycle(5),
            simple_path(5),
        ]
    )
    assert len(members) == 7
    return ForbiddenFamily("forest", members)


# ---------------------------------------------------------------------------
# monotone-walk families (computed, not hard-coded)

def is_monotone_walk_image(cog: CircularOrderedGraph, k: int) -> bool:
    """Can a k-vertex walk with cyclically increasing positions cover every vertex?

    The walk visits pairwise distinct vertices, except that the final vertex
    may close back on the first; positions must strictly increase along the
    cut starting at the first vertex.  Targets of such a spanning walk are
    exactly the ordered graphs a simple ordered path maps onto.
    """
    n = cog.n
    if n < 2 or k < 2 or n > k:
        return False
    full = (1 << n) - 1
    adj = cog.graph.adj
    pos = cog.order.position

    def extend(start: int, rel, v: int, visited: int, t: int) -> bool:
        if t == k:
            return visited == full
        row = adj[v]
        for w in range(n):
            if (row >> w) & 1 and rel[w] > rel[v] and not (visited >> w) & 1:
                if extend(start, rel, w, visited | (1 << w), t + 1):
                    return True
        if t == k - 1 and (row >> start) & 1 and visited == full:
            return True
        return False

    for start in range(n):
        rel = [(pos[v] - pos[start]) % n for v in range(n)]
        if extend(start, rel, start, 1 << start, 1):
            return True
    return False


@lru_cache(maxsize=None)
def monotone_walk_family(k: int) -> ForbiddenFamily:
    """Minimal ordered graphs covered by a position-monotone walk on k vertices.

    A circularly ordered graph admits such a walk iff it contains one of
    these members; a graph avoiding them across some ordering has circular
    chromatic number below k - 1.  Computed from first principles: collect
    the walk images among all catalog classes on at most k vertices, then
    keep the minimal ones under induced containment.
    """
    if not (3 <= k <= MAX_WALK_FAMILY):
        raise ValueError(f"walk family supported for 3 <= k <= {MAX_WALK_FAMILY}")
    images = []
    for m in range(2, k + 1):
        for cog in catalog(m):
            if is_monotone_walk_image(cog, k):
                images.append(cog)
    minimal = [
        x
        for x in images
        if not any(
            y.n < x.n and contains_induced(x, y) for y in images
        )
    ]
    return ForbiddenFamily(f"walk-{k}", dedupe_members(minimal))


@lru_cache(maxsize=None)
def straight_walk_family(k: int) -> ForbiddenFamily:
    """Linear family generated by spanning supergraphs of the straight path,
    the shifted straight path, and the straight cycles on k and k-1 vertices.

    Stored as its four generators with subgraph semantics, which matches the
    spanning-supergraph expansion exactly.
    """
    if k < 4:
        raise ValueError("needs k >= 4")
    members = (
        straight_path(k),
        shifted_straight_path(k),
        straight_cycle(k),
        straight_cycle(k - 1),
    )
    return ForbiddenFamily(f"straight-walk-{k}", members, "subgraph", "linear")


# ---------------------------------------------------------------------------
# the ordering gadget and its forbidden family

def gadget_ordering() -> CircularOrderedGraph:
    """The gadget in its canonical (identity) circular ordering."""
    return make_ordered(ordering_gadget(), range(6))


@lru_cache(maxsize=None)
def gadget_family() -> ForbiddenFamily:
    """Every circular ordering of the gadget except the canonical class.

    120 cut-at-0 sequences fall into 60 classes (the gadget has exactly two
    automorphisms); removing the canonical class leaves 59 members.
    """
    g = ordering_gadget()
    keep = {}
    for seq in all_cyclic_sequences(6):
        cog = make_ordered(g, seq)
        keep.setdefault(cog.canonical_key, cog)
    canonical = gadget_ordering().canonical_key
    members = dedupe_members(v for k, v in keep.items() if k != canonical)
    assert len(members) == 59
    return ForbiddenFamily("gadget", members)


# ---------------------------------------------------------------------------
# registry for the command line

BUILTIN_FAMILY_NAMES = (
    "circular-arc",
    "crossing",
    "linear-forest",
    "caterpillar-forest",
    "forest",
    "walk-3",
    "walk-4",
    "walk-5",
    "walk-6",
    "straight-walk-4",
    "straight-walk-5",
    "straight-walk-6",
    "gadget",
)


def builtin_family(name: str) -> ForbiddenFamily:
    fixed = {
        "circular-arc": circular_arc_family,
        "crossing": crossing_family,
        "linear-forest": linear_forest_family,
        "caterpillar-forest": caterpillar_family,
        "forest": forest_family,
        "gadget": gadget_family,
    }
    if name in fixed:
        return fixed[name]()
    if name.startswith("walk-"):
        return monotone_walk_family(int(name.split("-")[1]))
    if name.startswith("straight-walk-"):
        return straight_walk_family(int(name.split("-")[2]))
    raise ValueError(f"unknown family {name!r} (choose from {', '.join(BUILTIN_FAMILY_NAMES)})")
