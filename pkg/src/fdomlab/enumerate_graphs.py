"""Exhaustive enumeration of small graphs up to isomorphism.

Vertex-augmentation with isomorphism rejection: graphs on k+1 vertices are
produced by attaching a new vertex to every subset of every k-vertex
graph, bucketed by a cheap invariant (degree sequence plus refined
colour multiset) and deduplicated by explicit isomorphism tests inside
each bucket.  Pure Python; fine through n = 8, usable at n = 9 with
patience, and far too slow beyond that.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph
from .iso import _initial_colours, is_isomorphic


def _invariant(g: Graph) -> tuple:
    cols = _initial_colours(g)
    return (g.n, g.m, tuple(sorted(g.degrees())), tuple(sorted(cols)))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (Graph(1, []),)
    out: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for base in all_graphs(n - 1):
        for subset in range(1 << (n - 1)):
            edges = list(base.edges())
            edges += [(v, n - 1) for v in range(n - 1) if (subset >> v) & 1]
            cand = Graph(n, edges)
            key = _invariant(cand)
            bucket = buckets.setdefault(key, [])
            if not any(is_isomorphic(cand, other) for other in bucket):
                bucket.append(cand)
                out.append(cand)
    return tuple(out)


def connected_graphs(n: int, min_degree: int = 0) -> list[Graph]:
    return [g for g in all_graphs(n)
            if g.is_connected() and g.min_degree() >= min_degree]
