"""Executable reduction from the cyclic ordering problem to ordering search.

An instance is a ground set with ordered triples; the constructed graph
keeps the ground set independent and attaches a three-vertex clique per
triple, wired so that each triple's six relevant vertices induce the
ordering gadget.  A gadget-family-free circular ordering of the whole graph
then forces every triple's support into the prescribed cyclic order, and
conversely any satisfying cyclic order extends to such an ordering.

Edge bookkeeping: each triple contributes its own 3 clique edges plus 6
cross edges and shares nothing with other triples (the ground set stays
independent), so the edge count is exactly 9 per triple.
"""

import itertools
from dataclasses import dataclass

from .graphs import Graph, induced_subgraph, is_isomorphic, ordering_gadget
from .circular import (
    CircularOrdering,
    CircularOrderedGraph,
    all_cyclic_sequences,
    avoids,
)
from .families import gadget_family

__all__ = [
    "CyclicOrderingInstance",
    "ReductionOutput",
    "build_reduction",
    "solve_cyclic_ordering",
    "find_gadget_copies",
    "embed_solution",
    "extract_cyclic_order",
    "generated_triples",
    "to_instance_text",
    "from_instance_text",
]

MAX_SOLVE = 8


@dataclass(frozen=True)
class CyclicOrderingInstance:
    """Ground set (element names) plus ordered triples over it."""

    elements: tuple[str, ...]
    triples: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        triples = tuple(tuple(t) for t in self.triples)
        if len(set(elements)) != len(elements):
            raise ValueError("element names must be distinct")
        known = set(elements)
        for t in triples:
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"triple {t!r} must have three distinct entries")
            if not set(t) <= known:
                raise ValueError(f"triple {t!r} uses unknown elements")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "triples", triples)


@dataclass
class ReductionOutput:
    graph: Graph
    element_ids: dict[str, int]
    gadget_ids: tuple[tuple[int, int, int], ...]

    @property
    def element_id_list(self) -> list[int]:
        return sorted(self.element_ids.values())


def build_reduction(instance: CyclicOrderingInstance) -> ReductionOutput:
    """Construct the search graph for an instance.

    Ground elements get ids 0..|A|-1 in input order and stay independent;
    triple number t gets the clique (x, y, z) = (|A|+3t, |A|+3t+1, |A|+3t+2)
    with cross edges {za, zb, zc, yb, yc, xc} for its triple (a, b, c).  The
    six vertices a, b, c, x, y, z then induce the ordering gadget with roles
    a, b in the two low-degree slots and z as the universal vertex.
    """
    ids = {name: i for i, name in enumerate(instance.elements)}
    base = len(instance.elements)
    pairs: set[tuple[int, int]] = set()
    gadgets = []
    for t, (a, b, c) in enumerate(instance.triples):
        x, y, z = base + 3 * t, base + 3 * t + 1, base + 3 * t + 2
        gadgets.append((x, y, z))
        ia, ib, ic = ids[a], ids[b], ids[c]
        for u, v in ((x, y), (x, z), (y, z), (z, ia), (z, ib), (z, ic), (y, ib), (y, ic), (x, ic)):
            pairs.add((min(u, v), max(u, v)))
    graph = Graph(base + 3 * len(instance.triples), frozenset(pairs))
    return ReductionOutput(graph, ids, tuple(gadgets))


def generated_triples(order: tuple[str, ...]) -> set[tuple[str, str, str]]:
    """All ordered triples a cyclic order of names generates."""
    pos = {name: i for i, name in enumerate(order)}
    n = len(order)
    out = set()
    for a, b, c in itertools.permutations(order, 3):
        if (pos[b] - pos[a]) % n < (pos[c] - pos[a]) % n:
            out.add((a, b, c))
    return out


def _order_satisfies(order: tuple[str, ...], instance: CyclicOrderingInstance) -> bool:
    pos = {name: i for i, name in enumerate(order)}
    n = len(order)
    for a, b, c in instance.triples:
        if not (pos[b] - pos[a]) % n < (pos[c] - pos[a]) % n:
            return False
    return True


def solve_cyclic_ordering(instance: CyclicOrderingInstance) -> tuple[str, ...] | None:
    """Brute force over rotation-canonical cyclic orders of the ground set."""
    n = len(instance.elements)
    if n > MAX_SOLVE:
        raise ValueError(f"cyclic ordering solver capped at |A| <= {MAX_SOLVE}")
    if n == 0:
        return () if not instance.triples else None
    for seq in all_cyclic_sequences(n):
        order = tuple(instance.elements[i] for i in seq)
        if _order_satisfies(order, instance):
            return order
    return None


def find_gadget_copies(graph: Graph) -> list[tuple[int, ...]]:
    """All 6-vertex sets inducing a copy of the ordering gadget."""
    target = ordering_gadget()
    want_degs = target.degree_sequence()
    out = []
    for subset in itertools.combinations(range(graph.n), 6):
        induced = induced_subgraph(graph, subset)
        if induced.edge_count != target.edge_count:
            continue
        if induced.degree_sequence() != want_degs:
            continue
        if is_isomorphic(induced, target):
            out.append(subset)
    return out


def embed_solution(
    reduction: ReductionOutput,
    instance: CyclicOrderingInstance,
    order: tuple[str, ...],
) -> CircularOrdering:
    """Extend a satisfying cyclic order of the ground set to the whole graph.

    Each triple's clique vertices are inserted, in the order x, y, z,
    immediately after the triple's third element (before the next ground
    element), which realizes the canonical gadget ordering on the triple's
    six vertices.
    """
    if sorted(order) != sorted(instance.elements):
        raise ValueError("order must be a cyclic order of the ground set")
    if not _order_satisfies(order, instance):
        raise ValueError("order does not satisfy the instance")
    seq: list[int] = []
    for name in order:
        seq.append(reduction.element_ids[name])
        for t, triple in enumerate(instance.triples):
            if triple[2] == name:
                seq.extend(reduction.gadget_ids[t])
    ordering = CircularOrdering(tuple(seq))
    cog = CircularOrderedGraph(reduction.graph, ordering)
    if not avoids(cog, gadget_family()):
        raise RuntimeError("embedded ordering failed the avoidance re-check")
    return ordering


def extract_cyclic_order(
    reduction: ReductionOutput,
    instance: CyclicOrderingInstance,
    witness: CircularOrdering,
) -> tuple[str, ...]:
    """Read a satisfying cyclic order of the ground set off a witness ordering."""
    cog = CircularOrderedGraph(reduction.graph, witness)
    if not avoids(cog, gadget_family()):
        raise ValueError("witness does not avoid the gadget family")
    names = {i: name for name, i in reduction.element_ids.items()}
    order = tuple(names[v] for v in witness.seq if v in names)
    if not _order_satisfies(order, instance):
        raise RuntimeError("extracted order fails the instance; reduction broken")
    return order


# ---------------------------------------------------------------------------
# instance file format

def to_instance_text(instance: CyclicOrderingInstance) -> str:
    lines = ["elements " + " ".join(instance.elements)]
    lines += [f"triple {a} {b} {c}" for a, b, c in instance.triples]
    return "\n".join(lines) + "\n"


def from_instance_text(text: str) -> CyclicOrderingInstance:
    elements: tuple[str, ...] | None = None
    triples = []
    for ln in text.splitlines():
        parts = ln.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "elements":
            elements = tuple(parts[1:])
        elif parts[0] == "triple":
            if len(parts) != 4:
                raise ValueError(f"bad triple line: {ln!r}")
            triples.append(tuple(parts[1:]))
        else:
            raise ValueError(f"unrecognized instance line: {ln!r}")
    if elements is None:
        raise ValueError("instance file lacks an 'elements' line")
    return CyclicOrderingInstance(elements, tuple(triples))
