"""Direct constructions of avoiding circular orderings (no search).

The tree arrangement follows the recursive insertion rule: vertices are
processed in order of distance from the root, and each new leaf lands
immediately clockwise or counterclockwise of its parent depending on where
the parent's own ancestors sit.  "Ahead of x" means immediately clockwise
of x (right after it in the sequence); "behind x" means immediately
counterclockwise (right before it).

Every construction re-verifies its output against the matching forbidden
family before returning it, so a bug here fails loudly rather than
producing a subtly wrong certificate.
"""

from .graphs import (
    Graph,
    connected_components,
    induced_subgraph,
    is_caterpillar_forest,
    is_forest,
    is_linear_forest,
    is_outerplanar_oracle,
    path,
    rational_complete,
    MAX_OUTERPLANAR_ORACLE,
)
from .circular import (
    CircularOrderedGraph,
    avoids,
    has_crossing_edges,
    make_ordered,
    restrict,
)
from .families import caterpillar_family, crossing_family, forest_family, linear_forest_family
from .search import find_free_circular_ordering

__all__ = [
    "order_tree",
    "order_forest",
    "order_linear_forest",
    "zigzag",
    "zigzag_z",
    "zigzag_z_star",
    "is_zigzag",
    "path_order",
    "order_caterpillar",
    "order_outerplanar",
    "rational_complete_ordering",
    "lift_ordering",
]

MAX_OUTERPLANAR_ORDER = 9


def _bfs_plan(tree: Graph, root: int) -> tuple[list[int], dict[int, int]]:
    """Vertices by nondecreasing root distance (ties by id) plus parent map."""
    dist = {root: 0}
    parent: dict[int, int] = {}
    frontier = [root]
    while frontier:
        nxt = []
        for v in sorted(frontier):
            for u in sorted(tree.neighbors(v)):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    nxt.append(u)
        frontier = nxt
    order = sorted(dist, key=lambda v: (dist[v], v))
    return order, parent


def order_tree(tree: Graph, root: int = 0) -> CircularOrderedGraph:
    """Arrange a tree so the result avoids the forest family.

    Insertion rule for a new vertex with parent a: behind the root if a is
    the root; behind a if a's parent is the root; otherwise look at the
    grandparent b and great-grandparent c of the new vertex and place it
    ahead of a when the circle reads (a, b, c) clockwise, behind a when it
    reads (a, c, b).
    """
    if not (0 <= root < tree.n):
        raise ValueError("root out of range")
    if not is_forest(tree) or len(connected_components(tree)) != 1:
        raise ValueError("input is not a tree")
    order, parent = _bfs_plan(tree, root)
    seq = [root]

    def clockwise_sees(x: int, y: int, z: int) -> bool:
        n = len(seq)
        ix, iy, iz = seq.index(x), seq.index(y), seq.index(z)
        return (iy - ix) % n < (iz - ix) % n

    for v in order[1:]:
        a = parent[v]
        if a == root:
            seq.insert(seq.index(root), v)
            continue
        b = parent[a]
        if b == root:
            seq.insert(seq.index(a), v)
            continue
        c = parent[b]
        if clockwise_sees(a, b, c):
            seq.insert(seq.index(a) + 1, v)
        else:
            seq.insert(seq.index(a), v)

    result = make_ordered(tree, seq)
    if not avoids(result, forest_family()):
        raise RuntimeError("tree arrangement failed verification")
    return result


def _concatenate_blocks(graph: Graph, blocks: list[list[int]]) -> CircularOrderedGraph:
    seq: list[int] = []
    for block in blocks:
        seq.extend(block)
    return make_ordered(graph, seq)


def order_forest(forest: Graph, roots: dict[int, int] | None = None) -> CircularOrderedGraph:
    """Arrange each tree component, then lay the components around the circle.

    Components occupy contiguous arcs, so connected forbidden structures
    stay inside one component and disjoint edges from different components
    never cross.
    """
    if not is_forest(forest):
        raise ValueError("input is not a forest")
    blocks = []
    for comp in connected_components(forest):
        root = (roots or {}).get(comp[0], comp[0])
        sub = induced_subgraph(forest, comp)
        local_root = comp.index(root) if root in comp else 0
        ordered = order_tree(sub, local_root)
        blocks.append([comp[i] for i in ordered.order.seq])
    result = _concatenate_blocks(forest, blocks)
    if not avoids(result, forest_family()):
        raise RuntimeError("forest arrangement failed verification")
    return result


# ---------------------------------------------------------------------------
# zigzags

def _zigzag_positions(k: int) -> list[int]:
    evens = list(range(0, k, 2))
    odds = list(range(1, k, 2))
    return evens + odds[::-1]


def zigzag_z() -> CircularOrderedGraph:
    """One of the two 4-vertex zigzags (its dual is the other)."""
    return make_ordered(path(4), (0, 1, 3, 2))


def zigzag_z_star() -> CircularOrderedGraph:
    return make_ordered(path(4), (0, 2, 3, 1))


def zigzag(k: int) -> CircularOrderedGraph:
    """A zigzag arrangement of the k-path: even path positions ascending,
    then odd positions descending.  Self-checked against the defining
    4-window property before returning."""
    if k < 1:
        raise ValueError("needs k >= 1")
    result = make_ordered(path(k), _zigzag_positions(k))
    if k >= 4 and not is_zigzag(result):
        raise RuntimeError("zigzag construction failed its self-check")
    return result


def path_order(graph: Graph) -> list[int]:
    """The vertex sequence of a path graph; rejects non-paths."""
    n = graph.n
    if n == 0:
        raise ValueError("empty graph is not a path")
    if n == 1:
        if graph.edge_count:
            raise ValueError("not a path")
        return [0]
    degs = [graph.degree(v) for v in range(n)]
    ends = [v for v in range(n) if degs[v] == 1]
    if graph.edge_count != n - 1 or len(ends) != 2 or any(d > 2 for d in degs):
        raise ValueError("not a path")
    start = min(ends)
    seq = [start]
    prev = -1
    while len(seq) < n:
        nxts = [u for u in graph.neighbors(seq[-1]) if u != prev]
        if len(nxts) != 1:
            raise ValueError("not a path")
        prev = seq[-1]
        seq.append(nxts[0])
    return seq


def is_zigzag(cog: CircularOrderedGraph) -> bool:
    """Is this ordered path a zigzag (every 4 consecutive path vertices
    ordered as one of the two 4-zigzags)?"""
    order = path_order(cog.graph)
    keys = {zigzag_z().canonical_key, zigzag_z_star().canonical_key}
    for i in range(len(order) - 3):
        window = order[i : i + 4]
        if restrict(cog, window).canonical_key not in keys:
            return False
    return True


def order_linear_forest(graph: Graph) -> CircularOrderedGraph:
    """Zigzag each path component and lay the components around the circle."""
    if not is_linear_forest(graph):
        raise ValueError("input is not a linear forest")
    blocks = []
    for comp in connected_components(graph):
        sub = induced_subgraph(graph, comp)
        local_path = path_order(sub)
        zz = _zigzag_positions(len(comp))
        blocks.append([comp[local_path[i]] for i in zz])
    result = _concatenate_blocks(graph, blocks)
    if not avoids(result, linear_forest_family()):
        raise RuntimeError("linear forest arrangement failed verification")
    return result


# ---------------------------------------------------------------------------
# caterpillars

def _component_spine(graph: Graph, comp: list[int]) -> list[int]:
    """A dominating path of a caterpillar component: the leafless spine
    extended by one absorbed leaf at each end."""
    members = set(comp)
    deg = {v: sum(1 for u in graph.neighbors(v) if u in members) for v in comp}
    spine = [v for v in comp if deg[v] >= 2]
    if not spine:
        return sorted(comp)  # single vertex or single edge
    if len(spine) == 1:
        spine_path = spine[:]
    else:
        spine_set = set(spine)
        sdeg = {v: sum(1 for u in graph.neighbors(v) if u in spine_set) for v in spine}
        start = min(v for v in spine if sdeg[v] <= 1)
        spine_path = [start]
        prev = -1
        while True:
            nxts = [
                u
                for u in graph.neighbors(spine_path[-1])
                if u in spine_set and u != prev and u not in spine_path
            ]
            if not nxts:
                break
            prev = spine_path[-1]
            spine_path.append(min(nxts))
    for endpoint, where in ((spine_path[0], "front"), (spine_path[-1], "back")):
        free = [
            u
            for u in graph.neighbors(endpoint)
            if u in members and deg[u] == 1 and u not in spine_path
        ]
        if free:
            leaf = min(free)
            if where == "front":
                spine_path.insert(0, leaf)
            else:
                spine_path.append(leaf)
    return spine_path


def order_caterpillar(graph: Graph) -> CircularOrderedGraph:
    """Arrange a caterpillar forest so the result avoids the caterpillar family.

    Per component: zigzag the dominating path, then tuck each interior path
    vertex's leaves into the path-free circular segment between that
    vertex's path neighbors.
    """
    if not is_caterpillar_forest(graph):
        raise ValueError("input is not a caterpillar forest")
    blocks = []
    for comp in connected_components(graph):
        members = set(comp)
        spine = _component_spine(graph, comp)
        spine_set = set(spine)
        k = len(spine)
        seq = [spine[i] for i in _zigzag_positions(k)]
        for j in range(1, k - 1):
            leaves = sorted(
                u
                for u in graph.neighbors(spine[j])
                if u in members and u not in spine_set
            )
            if not leaves:
                continue
            left, right = spine[j - 1], spine[j + 1]
            ileft, iright = seq.index(left), seq.index(right)
            if _arc_is_path_free(seq, ileft, iright, spine_set):
                at = ileft + 1
            elif _arc_is_path_free(seq, iright, ileft, spine_set):
                at = iright + 1
            else:
                raise RuntimeError("no path-free segment next to a spine vertex")
            seq[at:at] = leaves
        blocks.append(seq)
    result = _concatenate_blocks(graph, blocks)
    if not avoids(result, caterpillar_family()):
        raise RuntimeError("caterpillar arrangement failed verification")
    return result


def _arc_is_path_free(seq: list[int], start: int, stop: int, spine_set: set[int]) -> bool:
    """No spine vertex strictly inside the clockwise arc seq[start] -> seq[stop]."""
    n = len(seq)
    i = (start + 1) % n
    while i != stop:
        if seq[i] in spine_set:
            return False
        i = (i + 1) % n
    return True


# ---------------------------------------------------------------------------
# outerplanar graphs

def order_outerplanar(graph: Graph) -> CircularOrderedGraph:
    """A circular ordering in which no two edges cross, for outerplanar input.

    The input is vetted by the forbidden-minor oracle (within its cap), then
    a non-crossing arrangement is found by exhaustive search; those are
    exactly the orderings avoiding the crossing family.
    """
    if graph.n > MAX_OUTERPLANAR_ORDER:
        raise ValueError(f"outerplanar ordering capped at n <= {MAX_OUTERPLANAR_ORDER}")
    if graph.n <= MAX_OUTERPLANAR_ORACLE and not is_outerplanar_oracle(graph):
        raise ValueError("input is not outerplanar")
    outcome = find_free_circular_ordering(graph, crossing_family())
    if not outcome.found:
        raise ValueError("input is not outerplanar (no non-crossing arrangement)")
    result = CircularOrderedGraph(graph, outcome.witness)
    if has_crossing_edges(result):
        raise RuntimeError("outerplanar arrangement failed verification")
    return result


# ---------------------------------------------------------------------------
# homomorphism-driven orderings

def rational_complete_ordering(p: int, q: int) -> CircularOrderedGraph:
    """The rational complete graph in its natural circular ordering 0..p-1."""
    return make_ordered(rational_complete(p, q), range(p))


def lift_ordering(graph: Graph, hom, target: CircularOrderedGraph) -> CircularOrderedGraph:
    """Pull an ordering back along a homomorphism into the ordered target.

    Each target vertex is replaced by its preimage block (ascending ids), so
    preimages are contiguous; any position-monotone walk in the result then
    projects to one in the target.
    """
    images = list(hom[v] for v in range(graph.n)) if not isinstance(hom, dict) else [
        hom[v] for v in range(graph.n)
    ]
    for u, v in graph.edges:
        if images[u] == images[v] or not target.graph.has_edge(images[u], images[v]):
            raise ValueError("map is not a graph homomorphism")
    seq: list[int] = []
    for x in target.order.seq:
        seq.extend(v for v in range(graph.n) if images[v] == x)
    return make_ordered(graph, seq)
