"""Ordered patterns, linearly ordered graphs, and the two containment semantics.

A pattern fixes required edges, forbidden edges, and an ordering; the pairs
it leaves unconstrained expand to all completions.  Families are stored
pre-expanded and deduplicated so avoidance checks stay uniform.

Two containment semantics coexist deliberately: families of ordered graphs
use induced containment (edges and non-edges both match), while families
generated by spanning supergraphs use subgraph containment (required edges
only).  Conflating them silently breaks the chromatic-threshold tests.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph
from .circular import (
    CircularOrderedGraph,
    circular_closure,
    make_ordered,
    _pairs,
)

__all__ = [
    "OrderedPattern",
    "LinOrderedGraph",
    "ForbiddenFamily",
    "make_linear",
    "lin_canonical",
    "represented",
    "expand_pattern_family",
    "spanning_supergraph_closure",
    "linearize",
    "lin_contains",
    "lin_avoids",
    "straight_path",
    "shifted_straight_path",
    "straight_cycle",
    "to_pattern_text",
    "from_pattern_text",
]


@dataclass(frozen=True)
class LinOrderedGraph:
    """A graph with a linear ordering: order[rank] = vertex id at that rank."""

    graph: Graph
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        if sorted(order) != list(range(self.graph.n)):
            raise ValueError("order must be a permutation of the vertex set")
        object.__setattr__(self, "order", order)

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def rank_of(self) -> tuple[int, ...]:
        ranks = [0] * self.n
        for r, v in enumerate(self.order):
            ranks[v] = r
        return tuple(ranks)

    @cached_property
    def rank_adjacency(self) -> tuple[int, ...]:
        """radj[r] = bitmask of ranks adjacent to the vertex at rank r."""
        out = [0] * self.n
        rank = self.rank_of
        for u, v in self.graph.edges:
            ru, rv = rank[u], rank[v]
            out[ru] |= 1 << rv
            out[rv] |= 1 << ru
        return tuple(out)

    @cached_property
    def rank_mask(self) -> int:
        """Rank-pair adjacency bitmask; equal masks = isomorphic ordered graphs."""
        mask = 0
        radj = self.rank_adjacency
        for k, (i, j) in enumerate(_pairs(self.n)):
            if (radj[j] >> i) & 1:
                mask |= 1 << k
        return mask

    @property
    def canonical_key(self) -> tuple[int, int]:
        return (self.n, self.rank_mask)

    def dual(self) -> "LinOrderedGraph":
        return LinOrderedGraph(self.graph, tuple(reversed(self.order)))

    def closure(self) -> CircularOrderedGraph:
        """The circularly ordered graph obtained by bending the line into a circle."""
        return CircularOrderedGraph(self.graph, circular_closure(self.order))


def make_linear(graph: Graph, order=None) -> LinOrderedGraph:
    if order is None:
        order = range(graph.n)
    return LinOrderedGraph(graph, tuple(order))


def lin_canonical(lg: LinOrderedGraph) -> LinOrderedGraph:
    """Representative with ids equal to ranks (identity order)."""
    rank = lg.rank_of
    edges = frozenset(
        (min(rank[u], rank[v]), max(rank[u], rank[v])) for u, v in lg.graph.edges
    )
    return make_linear(Graph(lg.n, edges))


@dataclass(frozen=True)
class OrderedPattern:
    """Required edges E, forbidden edges NE, and a cyclic or linear ordering."""

    n: int
    required: frozenset[tuple[int, int]]
    forbidden: frozenset[tuple[int, int]]
    kind: str = "cyclic"  # or "linear"
    seq: tuple[int, ...] | None = None

    def __post_init__(self):
        req = frozenset(tuple(sorted(e)) for e in self.required)
        forb = frozenset(tuple(sorted(e)) for e in self.forbidden)
        if req & forb:
            raise ValueError("required and forbidden pairs must be disjoint")
        if self.kind not in ("cyclic", "linear"):
            raise ValueError("kind must be 'cyclic' or 'linear'")
        seq = tuple(self.seq) if self.seq is not None else tuple(range(self.n))
        object.__setattr__(self, "required", req)
        object.__setattr__(self, "forbidden", forb)
        object.__setattr__(self, "seq", seq)

    @property
    def unconstrained(self) -> list[tuple[int, int]]:
        return [
            p
            for p in itertools.combinations(range(self.n), 2)
            if p not in self.required and p not in self.forbidden
        ]


def represented(pattern: OrderedPattern) -> list:
    """All labeled completions of the pattern, one per unconstrained subset."""
    free = pattern.unconstrained
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            g = Graph(pattern.n, pattern.required | frozenset(extra))
            if pattern.kind == "cyclic":
                out.append(make_ordered(g, pattern.seq))
            else:
                out.append(LinOrderedGraph(g, pattern.seq))
    return out


@dataclass(frozen=True)
class ForbiddenFamily:
    """A named, expanded, deduplicated set of ordered graphs."""

    name: str
    members: tuple
    semantics: str = "induced"  # or "subgraph"
    kind: str = "circular"  # or "linear"

    def __post_init__(self):
        if self.semantics not in ("induced", "subgraph"):
            raise ValueError("semantics must be 'induced' or 'subgraph'")
        if self.kind not in ("circular", "linear"):
            raise ValueError("kind must be 'circular' or 'linear'")
        object.__setattr__(self, "members", tuple(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def dedupe_members(members) -> tuple:
    seen = {}
    for m in members:
        seen.setdefault(m.canonical_key, m)
    return tuple(
        seen[k]
        for k in sorted(seen, key=lambda key: (key[0], seen[key].graph.edge_count, key[1]))
    )


def expand_pattern_family(name: str, pattern: OrderedPattern) -> ForbiddenFamily:
    kind = "circular" if pattern.kind == "cyclic" else "linear"
    return ForbiddenFamily(name, dedupe_members(represented(pattern)), "induced", kind)


def spanning_supergraph_closure(seed, name: str | None = None) -> ForbiddenFamily:
    """All ordered graphs on the seed's ordered vertex set with a superset of its edges."""
    if isinstance(seed, CircularOrderedGraph):
        pattern = OrderedPattern(
            seed.n, frozenset(seed.graph.edges), frozenset(), "cyclic", seed.order.seq
        )
    else:
        pattern = OrderedPattern(
            seed.n, frozenset(seed.graph.edges), frozenset(), "linear", seed.order
        )
    return expand_pattern_family(name or "closure", pattern)


def linearize(family) -> list[LinOrderedGraph]:
    """All linear orderings whose circular closure lies in the given set.

    Each circular class on m vertices contributes its m cuts, deduplicated
    up to isomorphism of linearly ordered graphs.
    """
    members = getattr(family, "members", family)
    seen = {}
    for cog in members:
        for x in range(cog.n):
            lg = lin_canonical(LinOrderedGraph(cog.graph, tuple(cog.order.cut_at(x))))
            seen.setdefault(lg.canonical_key, lg)
    return [seen[k] for k in sorted(seen)]


def lin_contains(host: LinOrderedGraph, pat: LinOrderedGraph, semantics: str = "induced") -> bool:
    """Order-preserving containment of pat in host.

    induced: the picked ranks carry exactly pat's edges; subgraph: they carry
    at least pat's required edges.
    """
    m = pat.n
    if m > host.n:
        return False
    pmask = pat.rank_mask
    radj = host.rank_adjacency
    for ranks in itertools.combinations(range(host.n), m):
        mask = 0
        k = 0
        for b in range(1, m):
            row = radj[ranks[b]]
            for a in range(b):
                if (row >> ranks[a]) & 1:
                    mask |= 1 << k
                k += 1
        if semantics == "induced":
            if mask == pmask:
                return True
        else:
            if mask & pmask == pmask:
                return True
    return False


def lin_avoids(host: LinOrderedGraph, family, semantics: str | None = None) -> bool:
    members = getattr(family, "members", family)
    sem = semantics or getattr(family, "semantics", "induced")
    return not any(lin_contains(host, pat, sem) for pat in members)


# ---------------------------------------------------------------------------
# straight paths and cycles (generators used in linear families)

def straight_path(k: int) -> LinOrderedGraph:
    """Path v_1..v_k ordered by its natural vertex order."""
    if k < 1:
        raise ValueError("needs k >= 1")
    edges = frozenset((i, i + 1) for i in range(k - 1))
    return make_linear(Graph(k, edges))


def shifted_straight_path(k: int) -> LinOrderedGraph:
    """Path v_1..v_k with the final path vertex ranked first."""
    if k < 2:
        raise ValueError("needs k >= 2")
    edges = frozenset((i, i + 1) for i in range(k - 1))
    order = (k - 1,) + tuple(range(k - 1))
    return LinOrderedGraph(Graph(k, edges), order)


def straight_cycle(k: int) -> LinOrderedGraph:
    """Cycle v_1..v_k v_1 ordered by its natural vertex order."""
    if k < 3:
        raise ValueError("needs k >= 3")
    edges = frozenset((i, i + 1) for i in range(k - 1)) | {(0, k - 1)}
    return make_linear(Graph(k, edges))


# ---------------------------------------------------------------------------
# pattern file format

def to_pattern_text(pattern: OrderedPattern) -> str:
    lines = [str(pattern.n)]
    lines += [f"E {u} {v}" for u, v in sorted(pattern.required)]
    lines += [f"NE {u} {v}" for u, v in sorted(pattern.forbidden)]
    tag = "CYCLIC" if pattern.kind == "cyclic" else "LINEAR"
    lines.append(f"{tag} " + " ".join(map(str, pattern.seq)))
    return "\n".join(lines) + "\n"


def from_pattern_text(text: str) -> OrderedPattern:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty pattern file")
    n = int(lines[0])
    required, forbidden = set(), set()
    kind, seq = None, None
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "E":
            required.add((int(parts[1]), int(parts[2])))
        elif parts[0] == "NE":
            forbidden.add((int(parts[1]), int(parts[2])))
        elif parts[0] in ("CYCLIC", "LINEAR"):
            kind = "cyclic" if parts[0] == "CYCLIC" else "linear"
            seq = tuple(map(int, parts[1:]))
        else:
            raise ValueError(f"unrecognized pattern line: {ln!r}")
    if kind is None:
        raise ValueError("pattern file lacks a CYCLIC/LINEAR line")
    return OrderedPattern(n, frozenset(required), frozenset(forbidden), kind, seq)
