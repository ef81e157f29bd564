"""Circular orderings of vertex sets and circularly ordered graphs.

A circular ordering is stored as a cyclic vertex sequence, canonically
rotated so the minimum id comes first; two sequences related by rotation
denote the same ternary betweenness relation.  Reflections are *not*
identified: reversing the sequence is the distinct dual object.

Isomorphism of circularly ordered graphs (adjacency plus cyclic order
preserved) reduces to comparing a rotation-minimal bitmask of the
position-indexed adjacency, which keeps containment checks and catalog
enumeration cheap at desk scale.
"""

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .graphs import Graph, graph_complement, induced_subgraph

__all__ = [
    "CircularOrdering",
    "CircularOrderedGraph",
    "circular_closure",
    "cut_at",
    "triple_in",
    "make_ordered",
    "dual",
    "complement",
    "restrict",
    "circ_iso",
    "contains_induced",
    "avoids",
    "has_crossing_edges",
    "catalog",
    "all_cyclic_sequences",
    "unit_circle_points",
    "satisfies_consecutiveness",
    "has_consecutive_ordering",
    "to_ordering_text",
    "from_ordering_text",
]

MAX_CATALOG = 6


@dataclass(frozen=True)
class CircularOrdering:
    """A cyclic sequence of the ids 0..n-1, canonical rotation (min id first)."""

    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.seq)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError("sequence must be a permutation of 0..n-1")
        if seq:
            k = seq.index(min(seq))
            seq = seq[k:] + seq[:k]
        object.__setattr__(self, "seq", seq)

    @property
    def n(self) -> int:
        return len(self.seq)

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(self.seq):
            pos[v] = i
        return tuple(pos)

    def cut_at(self, x: int) -> list[int]:
        """The linear order starting at x whose circular closure is this ordering."""
        if not (0 <= x < self.n):
            raise ValueError(f"unknown vertex {x}")
        k = self.position[x]
        return list(self.seq[k:] + self.seq[:k])

    def triple(self, x: int, y: int, z: int) -> bool:
        """True iff y lies strictly between x and z reading the cycle from x."""
        if len({x, y, z}) != 3:
            raise ValueError("betweenness is defined on distinct triples only")
        pos = self.position
        n = self.n
        dy = (pos[y] - pos[x]) % n
        dz = (pos[z] - pos[x]) % n
        return dy < dz


def circular_closure(linear) -> CircularOrdering:
    """Circular ordering generated by reading a linear order around the circle."""
    return CircularOrdering(tuple(linear))


def cut_at(order: CircularOrdering, x: int) -> list[int]:
    return order.cut_at(x)


def triple_in(order: CircularOrdering, x: int, y: int, z: int) -> bool:
    return order.triple(x, y, z)


# ---------------------------------------------------------------------------
# position-pair bitmask machinery

@lru_cache(maxsize=None)
def _pairs(m: int) -> tuple[tuple[int, int], ...]:
    # column order (0,1), (0,2), (1,2), (0,3), ...
    return tuple((i, j) for j in range(1, m) for i in range(j))


@lru_cache(maxsize=None)
def _rotation_maps(m: int) -> tuple[tuple[int, ...], ...]:
    """For each rotation s: table sending pair index k to its rotated index."""
    pairs = _pairs(m)
    index = {p: k for k, p in enumerate(pairs)}
    maps = []
    for s in range(m):
        table = []
        for i, j in pairs:
            a, b = (i - s) % m, (j - s) % m
            if a > b:
                a, b = b, a
            table.append(index[(a, b)])
        maps.append(tuple(table))
    return tuple(maps)


def _rotate_mask(mask: int, table: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return out


def canonical_mask(mask: int, m: int) -> int:
    """Minimum of the position-pair bitmask over all m rotations."""
    if m <= 1:
        return mask
    return min(_rotate_mask(mask, t) for t in _rotation_maps(m))


@dataclass(frozen=True)
class CircularOrderedGraph:
    """A graph together with a circular ordering of its vertex set."""

    graph: Graph
    order: CircularOrdering

    def __post_init__(self):
        if self.order.n != self.graph.n:
            raise ValueError("ordering must cover exactly the vertex set")

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def position_adjacency(self) -> tuple[int, ...]:
        """padj[i] = bitmask of positions adjacent to the vertex at position i."""
        seq, pos, adj = self.order.seq, self.order.position, self.graph.adj
        out = []
        for v in seq:
            m, row = 0, adj[v]
            while row:
                low = row & -row
                m |= 1 << pos[low.bit_length() - 1]
                row ^= low
            out.append(m)
        return tuple(out)

    @cached_property
    def pair_mask(self) -> int:
        """Adjacency of position pairs as a bitmask in column order."""
        mask = 0
        padj = self.position_adjacency
        for k, (i, j) in enumerate(_pairs(self.n)):
            if (padj[j] >> i) & 1:
                mask |= 1 << k
        return mask

    @cached_property
    def canonical_key(self) -> tuple[int, int]:
        return (self.n, canonical_mask(self.pair_mask, self.n))


def make_ordered(graph: Graph, seq) -> CircularOrderedGraph:
    return CircularOrderedGraph(graph, CircularOrdering(tuple(seq)))


def dual(cog: CircularOrderedGraph) -> CircularOrderedGraph:
    """Reflection: same graph, cyclic sequence reversed."""
    return make_ordered(cog.graph, tuple(reversed(cog.order.seq)))


def complement(cog: CircularOrderedGraph) -> CircularOrderedGraph:
    """Complement the edge set, keep the ordering."""
    return CircularOrderedGraph(graph_complement(cog.graph), cog.order)


def restrict(cog: CircularOrderedGraph, vertices) -> CircularOrderedGraph:
    """Induced ordered subgraph on the given ids, relabeled 0..|S|-1 in id order."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("restriction to the empty set")
    index = {v: i for i, v in enumerate(vs)}
    sub_seq = tuple(index[v] for v in cog.order.seq if v in index)
    return make_ordered(induced_subgraph(cog.graph, vs), sub_seq)


def circ_iso(a: CircularOrderedGraph, b: CircularOrderedGraph) -> bool:
    """Isomorphism of circularly ordered graphs (rotation-matching relabeling)."""
    return a.canonical_key == b.canonical_key


def _induced_pair_mask(cog: CircularOrderedGraph, positions: tuple[int, ...]) -> int:
    """Position-pair mask of the restriction to sorted host positions."""
    padj = cog.position_adjacency
    mask = 0
    k = 0
    for b in range(1, len(positions)):
        row = padj[positions[b]]
        for a in range(b):
            if (row >> positions[a]) & 1:
                mask |= 1 << k
            k += 1
    return mask


def contains_induced(host: CircularOrderedGraph, pattern: CircularOrderedGraph) -> bool:
    """True iff some restriction of host is isomorphic to pattern."""
    m = pattern.n
    if m > host.n:
        return False
    key = pattern.canonical_key[1]
    want_edges = pattern.graph.edge_count
    for positions in itertools.combinations(range(host.n), m):
        mask = _induced_pair_mask(host, positions)
        if mask.bit_count() != want_edges:
            continue
        if canonical_mask(mask, m) == key:
            return True
    return False


def _member_list(family):
    members = getattr(family, "members", family)
    return list(members)


def avoids(host: CircularOrderedGraph, family) -> bool:
    """True iff host contains no family member as induced ordered subgraph."""
    members = _member_list(family)
    by_size: dict[int, dict[int, set[int]]] = {}
    for mem in members:
        if mem.n > host.n:
            continue
        by_size.setdefault(mem.n, {}).setdefault(mem.graph.edge_count, set()).add(
            mem.canonical_key[1]
        )
    for m, by_edges in by_size.items():
        for positions in itertools.combinations(range(host.n), m):
            mask = _induced_pair_mask(host, positions)
            keys = by_edges.get(mask.bit_count())
            if keys and canonical_mask(mask, m) in keys:
                return False
    return True


def has_crossing_edges(cog: CircularOrderedGraph) -> bool:
    """True iff two vertex-disjoint edges interleave in the cyclic sequence."""
    pos, n = cog.order.position, cog.n
    edges = cog.graph.sorted_edges()
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if len({a, b, c, d}) != 4:
            continue
        span = (pos[b] - pos[a]) % n
        c_in = 0 < (pos[c] - pos[a]) % n < span
        d_in = 0 < (pos[d] - pos[a]) % n < span
        if c_in != d_in:
            return True
    return False


def all_cyclic_sequences(n: int):
    """All rotation-canonical cyclic sequences on 0..n-1 (id 0 first)."""
    if n == 0:
        yield ()
        return
    for rest in itertools.permutations(range(1, n)):
        yield (0,) + rest


def catalog(n: int) -> list[CircularOrderedGraph]:
    """One representative per isomorphism class of ordered graphs on n vertices.

    Every class has a representative whose cyclic sequence is the identity,
    so it suffices to scan edge sets and deduplicate by rotation-minimal
    mask.  Output sorted by (edge count, canonical mask).
    """
    if n > MAX_CATALOG:
        raise ValueError(f"catalog capped at n <= {MAX_CATALOG}")
    if n == 0:
        return [make_ordered(Graph(0), ())]
    pairs = _pairs(n)
    seen = set()
    for mask in range(1 << len(pairs)):
        key = canonical_mask(mask, n)
        seen.add(key)
    reps = []
    for key in sorted(seen, key=lambda k: (k.bit_count(), k)):
        edges = frozenset(p for bit, p in enumerate(pairs) if (key >> bit) & 1)
        reps.append(make_ordered(Graph(n, edges), range(n)))
    return reps


def unit_circle_points(cog: CircularOrderedGraph) -> list[tuple[int, float, float]]:
    """Embed the k-th sequence vertex at angle -2*pi*k/n on the unit circle.

    Traversing the circle clockwise recovers the cyclic sequence.
    """
    n = cog.n
    out = []
    for idx, v in enumerate(cog.order.seq):
        k = idx + 1
        out.append((v, math.cos(2 * math.pi * k / n), -math.sin(2 * math.pi * k / n)))
    return out


# ---------------------------------------------------------------------------
# consecutiveness property of circular-arc orderings

def satisfies_consecutiveness(cog: CircularOrderedGraph) -> bool:
    """Neighborhood-consecutiveness of an ordering, checked verbatim.

    For every edge between positions i < j, either all of positions
    i+1..j are neighbors of the vertex at i, or all of j+1..n-1,0..i are
    neighbors of the vertex at j.  Circular-arc graphs are exactly the
    graphs admitting such an ordering.
    """
    n = cog.n
    padj = cog.position_adjacency
    full = (1 << n) - 1
    for i in range(n):
        row = padj[i]
        for j in range(i + 1, n):
            if not (row >> j) & 1:
                continue
            fwd = ((1 << (j + 1)) - 1) & ~((1 << (i + 1)) - 1)  # positions i+1..j
            back = (full & ~((1 << (j + 1)) - 1)) | ((1 << (i + 1)) - 1)  # j+1.., ..i
            if (fwd & ~row) == 0:
                continue
            if (back & ~padj[j]) == 0:
                continue
            return False
    return True


def has_consecutive_ordering(graph: Graph) -> bool:
    """Exhaustively search for an ordering satisfying the consecutiveness test."""
    for seq in all_cyclic_sequences(graph.n):
        if satisfies_consecutiveness(make_ordered(graph, seq)):
            return True
    return False


# ---------------------------------------------------------------------------
# ordering file format

def to_ordering_text(cog: CircularOrderedGraph) -> str:
    lines = [str(cog.n), " ".join(map(str, cog.order.seq))]
    lines += [f"{u} {v}" for u, v in cog.graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_ordering_text(text: str) -> CircularOrderedGraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("ordering file needs a vertex count and a sequence line")
    n = int(lines[0])
    seq = tuple(map(int, lines[1].split()))
    if len(seq) != n:
        raise ValueError("sequence length does not match vertex count")
    pairs = [tuple(map(int, ln.split())) for ln in lines[2:]]
    return make_ordered(Graph(n, frozenset(pairs)), seq)
