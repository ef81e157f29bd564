"""Shared exhaustive-enumeration helpers, cached per test session."""

from functools import lru_cache

from circorder.graphs import Graph, canonical_edges, enumerate_graphs


@lru_cache(maxsize=None)
def graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    return tuple(enumerate_graphs(n, up_to_iso=True))


def all_graphs_up_to(n: int):
    out = []
    for m in range(1, n + 1):
        out.extend(graphs_up_to_iso(m))
    return out


@lru_cache(maxsize=None)
def trees_up_to_iso(n: int) -> tuple[Graph, ...]:
    """All trees on exactly n vertices up to isomorphism, grown by leaf attachment."""
    if n < 1:
        return ()
    reps = [Graph(1)]
    for m in range(2, n + 1):
        seen = set()
        grown = []
        for t in reps:
            for v in range(m - 1):
                cand = Graph(m, t.edges | {(v, m - 1)})
                key = canonical_edges(cand)
                if key not in seen:
                    seen.add(key)
                    grown.append(cand)
        reps = grown
    return tuple(reps)
