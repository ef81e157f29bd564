"""Plain finite graphs at desk scale.

Vertices are dense integer ids 0..n-1.  Edges are unordered pairs stored as
(u, v) tuples with u < v, so adjacency is symmetric and irreflexive by
construction.  Everything here is immutable and safe to share.

Besides the named generators, the module provides small-graph isomorphism,
exhaustive enumeration up to isomorphism, and a handful of brute-force
recognition oracles (forest variants, outerplanarity via forbidden minors)
that the test suite uses as independent ground truth.
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property

__all__ = [
    "Graph",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "claw",
    "subdivided_claw",
    "rational_complete",
    "rational_complete_below",
    "ordering_gadget",
    "graph_complement",
    "induced_subgraph",
    "is_isomorphic",
    "canonical_edges",
    "enumerate_graphs",
    "connected_components",
    "is_forest",
    "is_linear_forest",
    "is_caterpillar_forest",
    "has_minor",
    "is_outerplanar_oracle",
    "automorphism_count",
    "to_graph6",
    "from_graph6",
    "to_edge_list",
    "from_edge_list",
]

MAX_ENUM_ISO = 7
MAX_OUTERPLANAR_ORACLE = 8


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph: vertex count plus a set of unordered edge pairs."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = frozenset(_norm_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        for u, v in norm:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks: bit u of adj[v] is set iff uv is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v].bit_count() for v in range(self.n)))

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if (self.adj[v] >> u) & 1]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _from_pairs(n: int, pairs) -> Graph:
    return Graph(n, frozenset(_norm_edge(u, v) for u, v in pairs))


def path(k: int) -> Graph:
    """Path on k >= 1 vertices with edges {i, i+1}."""
    if k < 1:
        raise ValueError("path needs k >= 1")
    return _from_pairs(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    """Cycle on k >= 3 vertices."""
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return _from_pairs(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete needs k >= 1")
    return _from_pairs(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts {0..a-1} and {a..a+b-1}."""
    return _from_pairs(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def claw() -> Graph:
    """Star K_{1,3}: center 0, leaves 1..3."""
    return _from_pairs(4, [(0, 1), (0, 2), (0, 3)])


def subdivided_claw() -> Graph:
    """The claw with every edge subdivided once: center 0, mids 1..3, leaves 4..6.

    This 7-vertex tree is the minimal tree that is not a caterpillar.
    """
    return _from_pairs(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def rational_complete(p: int, q: int) -> Graph:
    """Vertices 0..p-1, edge ij iff the circular distance of i, j is >= q.

    For q = 1 this is the complete graph; for p < 2q it has no edges.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if q > p:
        raise ValueError("q must not exceed p")
    pairs = []
    for i, j in itertools.combinations(range(p), 2):
        d = j - i
        if min(d, p - d) >= q:
            pairs.append((i, j))
    return _from_pairs(p, pairs)


def rational_complete_below(k: int, n: int) -> Graph:
    """The rational complete graph on k*n - 1 vertices with distance threshold n.

    Its edge density ratio (kn-1)/n approaches k from below as n grows; these
    graphs realize every value of that sequence as a homomorphism target.
    """
    if k < 3:
        raise ValueError("needs k >= 3")
    if n < 1:
        raise ValueError("needs n >= 1")
    return rational_complete(k * n - 1, n)


def ordering_gadget() -> Graph:
    """Six-vertex gadget whose circular orderings are essentially unique.

    Role map: the construction's vertices v1..v6 are ids 0..5.  Ids 2..5
    induce a clique; the extra edges are {0,5}, {1,4}, {1,5}.  Degree
    sequence (1, 2, 3, 3, 4, 5); the only nontrivial graph automorphism
    swaps ids 2 and 3.
    """
    clique = list(itertools.combinations(range(2, 6), 2))
    return _from_pairs(6, clique + [(0, 5), (1, 4), (1, 5)])


def graph_complement(g: Graph) -> Graph:
    pairs = [e for e in itertools.combinations(range(g.n), 2) if e not in g.edges]
    return _from_pairs(g.n, pairs)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on the given vertex ids, relabeled 0..|S|-1 in id order."""
    vs = sorted(set(vertices))
    if any(v < 0 or v >= g.n for v in vs):
        raise ValueError("vertex id out of range")
    index = {v: i for i, v in enumerate(vs)}
    pairs = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return _from_pairs(len(vs), pairs)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# isomorphism and enumeration

def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree-based pruning (desk scale)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.n
    gadj, hadj = g.adj, h.adj
    gdeg = [m.bit_count() for m in gadj]
    hdeg = [m.bit_count() for m in hadj]
    # candidates for each g-vertex: h-vertices of equal degree
    cands = [[w for w in range(n) if hdeg[w] == gdeg[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(cands[v]))
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in cands[v]:
            if (used >> w) & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((gadj[v] >> u) & 1) != ((hadj[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
        return False

    return extend(0)


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    # column order: (0,1), (0,2), (1,2), (0,3), ... matches graph6 bit order
    idx = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            idx[(i, j)] = k
            k += 1
    return idx


def canonical_edges(g: Graph) -> frozenset[tuple[int, int]]:
    """Lexicographically minimal relabeling of the edge set.

    Branch-and-bound over permutations: positions are assigned one vertex at
    a time and a branch is abandoned as soon as its adjacency bits exceed the
    best known prefix.  Exact (explores ties), intended for n <= 8.
    """
    n = g.n
    if n == 0 or not g.edges:
        return frozenset()
    adj = g.adj
    best: list[tuple[int, ...] | None] = [None]

    def column(perm: list[int], j: int) -> tuple[int, ...]:
        vj = perm[j]
        return tuple((adj[perm[i]] >> vj) & 1 for i in range(j))

    def extend(perm: list[int], used: int, bits: tuple[int, ...]):
        j = len(perm)
        if j == n:
            if best[0] is None or bits < best[0]:
                best[0] = bits
            return
        for v in range(n):
            if (used >> v) & 1:
                continue
            perm.append(v)
            nb = bits + column(perm, j)
            if best[0] is None or nb <= best[0][: len(nb)]:
                extend(perm, used | (1 << v), nb)
            perm.pop()

    extend([], 0, ())
    assert best[0] is not None
    bits = best[0]
    pidx = _pair_index(n)
    return frozenset(e for e, k in pidx.items() if bits[k])


def enumerate_graphs(n: int, up_to_iso: bool = False):
    """Yield all labeled graphs on n vertices, or one graph per iso class.

    The up-to-iso mode grows representatives one vertex at a time, attaching
    each neighborhood subset and deduplicating by canonical edge set; this
    keeps the candidate count proportional to the class counts
    (1, 2, 4, 11, 34, 156, 1044 for n = 1..7).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not up_to_iso:
        pairs = list(itertools.combinations(range(n), 2))
        for r in range(len(pairs) + 1):
            for chosen in itertools.combinations(pairs, r):
                yield Graph(n, frozenset(chosen))
        return
    if n > MAX_ENUM_ISO:
        raise ValueError(f"up_to_iso enumeration capped at n <= {MAX_ENUM_ISO}")
    yield from _iso_classes(n)


def _iso_classes(n: int) -> list[Graph]:
    if n == 0:
        return [Graph(0)]
    reps = [Graph(1)]
    for m in range(2, n + 1):
        seen = set()
        grown = []
        for g in reps:
            base = g.sorted_edges()
            for nbrs in range(1 << (m - 1)):
                pairs = list(base)
                for u in range(m - 1):
                    if (nbrs >> u) & 1:
                        pairs.append((u, m - 1))
                cand = Graph(m, frozenset(pairs))
                key = canonical_edges(cand)
                if key not in seen:
                    seen.add(key)
                    grown.append(cand)
        reps = grown
    return reps


# ---------------------------------------------------------------------------
# recognition oracles

def is_forest(g: Graph) -> bool:
    """True iff g is acyclic: every component has |C| - 1 edges."""
    for comp in connected_components(g):
        members = set(comp)
        inside = sum(1 for u, _ in g.edges if u in members)
        if inside != len(comp) - 1:
            return False
    return True


def is_linear_forest(g: Graph) -> bool:
    return is_forest(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_caterpillar_forest(g: Graph) -> bool:
    """Forest whose components, after deleting all leaves, are (empty) paths."""
    if not is_forest(g):
        return False
    for comp in connected_components(g):
        inner = [v for v in comp if sum(1 for u in g.neighbors(v) if u in comp) >= 2]
        if not inner:
            continue
        degs = sorted(
            sum(1 for u in g.neighbors(v) if u in inner) for v in inner
        )
        # a nonempty path: connected with max degree <= 2; the spine of a tree
        # component is connected automatically, so degree check suffices
        if degs[-1] > 2:
            return False
    return True


def _contains_subgraph(g: Graph, h: Graph) -> bool:
    """True iff h embeds into g as a (not necessarily induced) subgraph."""
    if h.n > g.n or h.edge_count > g.edge_count:
        return False
    hdeg = [h.degree(v) for v in range(h.n)]
    gdeg = [g.degree(v) for v in range(g.n)]
    order = sorted(range(h.n), key=lambda v: -hdeg[v])
    image = [-1] * h.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == h.n:
            return True
        v = order[i]
        for w in range(g.n):
            if (used >> w) & 1 or gdeg[w] < hdeg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if h.has_edge(v, u) and not g.has_edge(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
        return False

    return extend(0)


def _contract(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv: v merges into u, result relabeled densely."""
    keep = [w for w in range(g.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    pairs = set()
    for a, b in g.edges:
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            pairs.add(_norm_edge(index[a2], index[b2]))
    return Graph(g.n - 1, frozenset(pairs))


def has_minor(g: Graph, h: Graph) -> bool:
    """Brute-force minor test: contract edges recursively, check subgraph embedding.

    Test oracle only; exponential, fine for n <= 8 hosts and tiny h.
    """
    seen = set()

    def rec(cur: Graph) -> bool:
        if cur.n < h.n or cur.edge_count < h.edge_count:
            return False
        key = canonical_edges(cur)
        if (cur.n, key) in seen:
            return False
        seen.add((cur.n, key))
        if _contains_subgraph(cur, h):
            return True
        return any(rec(_contract(cur, u, v)) for u, v in cur.sorted_edges())

    return rec(g)


def is_outerplanar_oracle(g: Graph) -> bool:
    """True iff g has neither a K_4 nor a K_{2,3} minor (brute force, n <= 8)."""
    if g.n > MAX_OUTERPLANAR_ORACLE:
        raise ValueError(f"outerplanarity oracle capped at n <= {MAX_OUTERPLANAR_ORACLE}")
    return not has_minor(g, complete(4)) and not has_minor(g, complete_bipartite(2, 3))


def automorphism_count(g: Graph) -> int:
    """Number of adjacency-preserving permutations (brute force, n <= 8)."""
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    count = 0
    for perm in itertools.permutations(range(n)):
        if any(degs[perm[v]] != degs[v] for v in range(n)):
            continue
        if all(
            g.has_edge(perm[u], perm[v]) for u, v in g.edges
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# file formats

def to_graph6(g: Graph) -> str:
    """Encode in graph6: 63-offset bytes, upper-triangle bits in column order."""
    if g.n > 62:
        raise ValueError("graph6 writer supports n <= 62")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if not (0 <= n <= 62):
        raise ValueError("graph6 reader supports n <= 62")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1 : 1 + need]
    if len(body) < need:
        raise ValueError("graph6 string too short")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        if not (0 <= v < 64):
            raise ValueError(f"invalid graph6 byte {ch!r}")
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return _from_pairs(n, pairs)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge list")
    n = int(lines[0])
    pairs = []
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        pairs.append((u, v))
    return _from_pairs(n, pairs)
