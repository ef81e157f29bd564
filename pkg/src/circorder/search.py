"""Backtracking search for pattern-avoiding circular and linear orderings.

Circular orderings are built as cut-at-0 sequences (fixing vertex 0 first
breaks rotation symmetry exactly), appending one vertex at a time.  The
cyclic order of already placed vertices never changes as the suffix grows,
so pattern checks can be confined to the newest vertex.

The engine precomputes, per host graph, the "hot" vertex subsets: those
whose induced subgraph matches some family member's underlying graph, along
with the subset's allowed orders (full orders of the subset that match no
member).  Placing a vertex of a hot subset prunes the branch as soon as the
relative order of its placed vertices extends to no allowed order; a subset
with no allowed orders kills a branch the moment it is touched.  Witnesses
are re-verified with the independent containment checker before they are
returned.
"""

import itertools
from dataclasses import dataclass

from .graphs import Graph, induced_subgraph, is_isomorphic
from .circular import (
    CircularOrdering,
    CircularOrderedGraph,
    all_cyclic_sequences,
    avoids,
    make_ordered,
)
from .patterns import LinOrderedGraph, lin_avoids, make_linear

__all__ = [
    "SearchOutcome",
    "find_free_circular_ordering",
    "find_free_linear_ordering",
    "count_free_orderings",
    "all_free_orderings",
    "naive_find_free_circular_ordering",
    "naive_find_free_linear_ordering",
]

MAX_CIRCULAR_SEARCH = 9
MAX_LINEAR_SEARCH = 9
MAX_COUNT = 8


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one ordering search.

    found implies the witness is present and re-verified; not found with
    exhaustive set means no qualifying ordering exists.
    """

    found: bool
    witness: object | None
    nodes_explored: int
    exhaustive: bool


def _members_of(family):
    return list(getattr(family, "members", family))


class _HotSubset:
    """A vertex subset able to host a forbidden member, with its allowed orders.

    Because the search only appends vertices, the placed part of the subset
    must occur as a contiguous run of some allowed order, starting at the
    subset vertex placed first.  allowed_runs[v] holds every allowed order
    rotated (cyclic case) or filtered (linear case) to start at v.
    """

    __slots__ = ("mask", "vertices", "allowed", "allowed_runs", "placed")

    def __init__(self, mask, vertices, allowed, cyclic: bool):
        self.mask = mask
        self.vertices = vertices
        self.allowed = allowed
        self.placed: list[int] = []
        runs: dict[int, list[tuple[int, ...]]] = {v: [] for v in vertices}
        for order in allowed:
            if cyclic:
                for i, v in enumerate(order):
                    runs[v].append(order[i:] + order[:i])
            else:
                runs[order[0]].append(order)
        self.allowed_runs = runs

    def compatible(self) -> bool:
        k = len(self.placed)
        if k == 0:
            return True
        if not self.allowed:
            return False
        if k == 1:
            return bool(self.allowed_runs[self.placed[0]])
        placed = tuple(self.placed)
        return any(
            run[:k] == placed for run in self.allowed_runs[placed[0]]
        )


def _circular_hot_subsets(graph: Graph, members) -> list[_HotSubset]:
    by_size: dict[int, list] = {}
    for mem in members:
        if 1 <= mem.n <= graph.n:
            by_size.setdefault(mem.n, []).append(mem)
    hot = []
    adj = graph.adj
    for m, mems in by_size.items():
        keysets = {mem.canonical_key for mem in mems}
        edge_counts = {mem.graph.edge_count for mem in mems}
        for subset in itertools.combinations(range(graph.n), m):
            inside, smask = 0, 0
            for v in subset:
                inside += (adj[v] & smask).bit_count()
                smask |= 1 << v
            if inside not in edge_counts:
                continue
            induced = induced_subgraph(graph, subset)
            if not any(
                mem.graph.edge_count == induced.edge_count
                and is_isomorphic(induced, mem.graph)
                for mem in mems
            ):
                continue
            local = {v: i for i, v in enumerate(subset)}
            allowed = []
            total = 0
            for tail in itertools.permutations(subset[1:]):
                order = (subset[0],) + tail
                total += 1
                cog = make_ordered(induced, tuple(local[v] for v in order))
                if cog.canonical_key not in keysets:
                    allowed.append(order)
            if len(allowed) == total:
                continue
            mask = 0
            for v in subset:
                mask |= 1 << v
            hot.append(_HotSubset(mask, subset, tuple(allowed), cyclic=True))
    return hot


def _search_engine(
    n: int,
    adj,
    hot: list[_HotSubset],
    deterministic: bool,
    find_all: bool,
    first_fixed: bool,
):
    """Shared append-only permutation search over hot-subset constraints."""
    hot_by_vertex: list[list[_HotSubset]] = [[] for _ in range(n)]
    for h in hot:
        for v in h.vertices:
            hot_by_vertex[v].append(h)
    seq: list[int] = []
    placed = 0
    nodes = 0
    witnesses: list[tuple] = []

    def place(v: int) -> bool:
        ok = True
        for h in hot_by_vertex[v]:
            h.placed.append(v)
            if ok and not h.compatible():
                ok = False
        return ok

    def unplace(v: int) -> None:
        for h in hot_by_vertex[v]:
            h.placed.pop()

    def extend() -> bool:
        nonlocal placed, nodes
        if len(seq) == n:
            witnesses.append(tuple(seq))
            return not find_all
        if deterministic:
            free = [v for v in range(n) if not (placed >> v) & 1]
        else:
            free = sorted(
                (v for v in range(n) if not (placed >> v) & 1),
                key=lambda v: (-(adj[v] & placed).bit_count(), v),
            )
        for v in free:
            seq.append(v)
            placed |= 1 << v
            nodes += 1
            done = place(v) and extend()
            unplace(v)
            seq.pop()
            placed &= ~(1 << v)
            if done:
                return True
        return False

    if first_fixed and n:
        seq.append(0)
        placed = 1
        nodes = 1
        if place(0):
            extend()
        unplace(0)
    else:
        extend()
    return witnesses, nodes


def _search_circular(graph: Graph, members, deterministic: bool, find_all: bool):
    """Core engine.  Returns (witnesses, nodes); witnesses capped at 1 unless find_all."""
    n = graph.n
    if n == 0:
        return [()], 0
    hot = _circular_hot_subsets(graph, members)
    return _search_engine(n, graph.adj, hot, deterministic, find_all, first_fixed=True)


def find_free_circular_ordering(
    graph: Graph, family, *, deterministic: bool = True, max_n: int = MAX_CIRCULAR_SEARCH
) -> SearchOutcome:
    """Search for a circular ordering of the graph avoiding the family.

    Deterministic mode branches in ascending vertex order, so the witness is
    the lexicographically least avoiding cut-at-0 sequence; otherwise
    candidates are tried by descending adjacency to the placed prefix, which
    finds witnesses sooner but never changes the decision.
    """
    if getattr(family, "kind", "circular") != "circular":
        raise ValueError("circular search needs a circular family")
    if graph.n > max_n:
        raise ValueError(f"graph exceeds the exhaustive search cap n <= {max_n}")
    members = _members_of(family)
    witnesses, nodes = _search_circular(graph, members, deterministic, find_all=False)
    if not witnesses:
        return SearchOutcome(False, None, nodes, True)
    witness = CircularOrdering(witnesses[0])
    if not avoids(CircularOrderedGraph(graph, witness), members):
        raise RuntimeError("search produced a witness that fails re-verification")
    return SearchOutcome(True, witness, nodes, True)


def all_free_orderings(graph: Graph, family, *, max_n: int = MAX_COUNT) -> list[CircularOrdering]:
    """All avoiding rotation-canonical orderings (exhaustive, small n)."""
    if graph.n > max_n:
        raise ValueError(f"exhaustive listing capped at n <= {max_n}")
    members = _members_of(family)
    witnesses, _ = _search_circular(graph, members, True, find_all=True)
    out = [CircularOrdering(w) for w in witnesses]
    for w in out:
        if not avoids(CircularOrderedGraph(graph, w), members):
            raise RuntimeError("enumeration produced an ordering that fails re-verification")
    return out


def count_free_orderings(graph: Graph, family, *, max_n: int = MAX_COUNT) -> int:
    """Number of rotation-canonical orderings avoiding the family."""
    return len(all_free_orderings(graph, family, max_n=max_n))


# ---------------------------------------------------------------------------
# linear search

def _linear_hot_subsets(graph: Graph, members, semantics: str) -> list[_HotSubset]:
    by_size: dict[int, list] = {}
    for mem in members:
        if 1 <= mem.n <= graph.n:
            by_size.setdefault(mem.n, []).append(mem)
    hot = []
    adj = graph.adj
    for m, mems in by_size.items():
        edge_counts = {mem.graph.edge_count for mem in mems}
        least_edges = min(edge_counts, default=0)
        for subset in itertools.combinations(range(graph.n), m):
            inside, smask = 0, 0
            for v in subset:
                inside += (adj[v] & smask).bit_count()
                smask |= 1 << v
            if semantics == "induced" and inside not in edge_counts:
                continue
            if semantics == "subgraph" and inside < least_edges:
                continue
            induced = induced_subgraph(graph, subset)
            if semantics == "induced":
                if not any(
                    mem.graph.edge_count == induced.edge_count
                    and is_isomorphic(induced, mem.graph)
                    for mem in mems
                ):
                    continue
            else:
                if not any(
                    mem.graph.edge_count <= induced.edge_count
                    and _spanning_subgraph(induced, mem.graph)
                    for mem in mems
                ):
                    continue
            local = {v: i for i, v in enumerate(subset)}
            masks = {mem.rank_mask for mem in mems}
            allowed = []
            total = 0
            for order in itertools.permutations(subset):
                total += 1
                lg = LinOrderedGraph(induced, tuple(local[v] for v in order))
                if semantics == "induced":
                    bad = lg.rank_mask in masks
                else:
                    bad = any(lg.rank_mask & pm == pm for pm in masks)
                if not bad:
                    allowed.append(order)
            if len(allowed) == total:
                continue
            mask = 0
            for v in subset:
                mask |= 1 << v
            hot.append(_HotSubset(mask, subset, tuple(allowed), cyclic=False))
    return hot


def _spanning_subgraph(host: Graph, pat: Graph) -> bool:
    """Does pat embed into host as a subgraph on the full vertex set?"""
    if host.n != pat.n:
        return False
    for perm in itertools.permutations(range(host.n)):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pat.edges):
            return True
    return False


def find_free_linear_ordering(
    graph: Graph,
    family,
    semantics: str | None = None,
    *,
    deterministic: bool = True,
    max_n: int = MAX_LINEAR_SEARCH,
) -> SearchOutcome:
    """Search for a linear ordering avoiding the family (both semantics)."""
    if graph.n > max_n:
        raise ValueError(f"graph exceeds the exhaustive search cap n <= {max_n}")
    sem = semantics or getattr(family, "semantics", "induced")
    members = _members_of(family)
    n = graph.n
    if n == 0:
        return SearchOutcome(True, make_linear(graph, ()), 0, True)
    hot = _linear_hot_subsets(graph, members, sem)
    witnesses, nodes = _search_engine(
        n, graph.adj, hot, deterministic, find_all=False, first_fixed=False
    )
    if not witnesses:
        return SearchOutcome(False, None, nodes, True)
    witness = LinOrderedGraph(graph, witnesses[0])
    if not lin_avoids(witness, members, sem):
        raise RuntimeError("search produced a witness that fails re-verification")
    return SearchOutcome(True, witness, nodes, True)


# ---------------------------------------------------------------------------
# naive reference implementations (test oracles)

def naive_find_free_circular_ordering(graph: Graph, family) -> SearchOutcome:
    """Generate-and-test over every rotation-canonical ordering."""
    members = _members_of(family)
    checked = 0
    for seq in all_cyclic_sequences(graph.n):
        checked += 1
        cog = make_ordered(graph, seq)
        if avoids(cog, members):
            return SearchOutcome(True, cog.order, checked, True)
    return SearchOutcome(False, None, checked, True)


def naive_find_free_linear_ordering(graph: Graph, family, semantics: str | None = None) -> SearchOutcome:
    sem = semantics or getattr(family, "semantics", "induced")
    members = _members_of(family)
    checked = 0
    for perm in itertools.permutations(range(graph.n)):
        checked += 1
        lg = LinOrderedGraph(graph, perm)
        if lin_avoids(lg, members, sem):
            return SearchOutcome(True, lg, checked, True)
    return SearchOutcome(False, None, checked, True)
