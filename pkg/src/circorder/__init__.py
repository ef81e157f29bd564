"""Circularly ordered graphs: forbidden patterns, search, and chromatic bounds."""

from .graphs import Graph
from .circular import CircularOrdering, CircularOrderedGraph, make_ordered
from .families import builtin_family
from .search import (
    SearchOutcome,
    find_free_circular_ordering,
    find_free_linear_ordering,
)

__all__ = [
    "Graph",
    "CircularOrdering",
    "CircularOrderedGraph",
    "make_ordered",
    "builtin_family",
    "SearchOutcome",
    "find_free_circular_ordering",
    "find_free_linear_ordering",
]
