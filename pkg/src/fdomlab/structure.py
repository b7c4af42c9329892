"""Structural queries: cut vertices and blocks, suspended paths, twins,
hammocks, and extraction of long suspended paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class SuspendedPath:
    """Path u_0..u_l whose endpoints have degree >= 3 in the host graph and
    whose internal vertices have degree exactly 2; endpoints are distinct."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def canonical(self) -> "SuspendedPath":
        if self.vertices[0] > self.vertices[-1] or (
                self.vertices[0] == self.vertices[-1]
                and self.vertices[1] > self.vertices[-2]):
            return SuspendedPath(tuple(reversed(self.vertices)))
        return self


@dataclass(frozen=True)
class Hammock:
    """A suspended 2-path and a suspended 3-path between the same pair of
    non-adjacent endpoints."""

    endpoints: tuple[int, int]
    two_path: SuspendedPath
    three_path: SuspendedPath

    def cycle_vertices(self) -> tuple[int, ...]:
        """The five vertices of the induced C5."""
        return tuple(sorted(set(self.two_path.vertices) | set(self.three_path.vertices)))


@dataclass
class StructureReport:
    min_degree: int
    max_degree: int
    connected: bool
    two_connected: bool
    cut_vertices: list[int]
    blocks: list[list[int]] = field(default_factory=list)
    suspended_paths: list[SuspendedPath] = field(default_factory=list)
    hammocks: list[Hammock] = field(default_factory=list)
    twin_pairs: list[tuple[SuspendedPath, SuspendedPath]] = field(default_factory=list)


def cut_vertices_and_blocks(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Iterative Hopcroft-Tarjan. Blocks are vertex lists of the maximal
    2-connected subgraphs (bridges give 2-vertex blocks)."""
    visited = [False] * g.n
    depth = [0] * g.n
    low = [0] * g.n
    parent: list[Optional[int]] = [None] * g.n
    cuts: set[int] = set()
    blocks: list[list[int]] = []
    edge_stack: list[tuple[int, int]] = []

    for root in range(g.n):
        if visited[root]:
            continue
        stack = [(root, iter(sorted(g.adj[root])))]
        visited[root] = True
        root_children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    depth[w] = depth[v] + 1
                    low[w] = depth[w]
                    parent[w] = v
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                elif w != parent[v] and depth[w] < depth[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], depth[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= depth[u]:
                    # u closes a block containing the edge (u, v)
                    block_edges = []
                    while edge_stack:
                        e = edge_stack.pop()
                        block_edges.append(e)
                        if e == (u, v):
                            break
                    verts = sorted({x for e in block_edges for x in e})
                    blocks.append(verts)
                    if u != root or root_children > 1:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts), blocks


def suspended_paths(g: Graph) -> list[SuspendedPath]:
    """All maximal suspended paths. A cycle hanging on a single 3+-vertex is
    not a suspended path (its endpoints would coincide)."""
    out = []
    seen = set()
    for u in range(g.n):
        if g.degree(u) < 3:
            continue
        for first in sorted(g.adj[u]):
            walk = [u, first]
            while g.degree(walk[-1]) == 2:
                a, b = g.adj[walk[-1]]
                walk.append(b if a == walk[-2] else a)
            v = walk[-1]
            if g.degree(v) < 3 or v == u:
                continue
            p = SuspendedPath(tuple(walk)).canonical()
            if p.vertices not in seen:
                seen.add(p.vertices)
                out.append(p)
    return sorted(out, key=lambda p: p.vertices)


def twin_pairs(paths: list[SuspendedPath]) -> list[tuple[SuspendedPath, SuspendedPath]]:
    groups: dict[tuple[int, int, int], list[SuspendedPath]] = {}
    for p in paths:
        a, b = p.endpoints
        groups.setdefault((min(a, b), max(a, b), p.length), []).append(p)
    out = []
    for grp in groups.values():
        for i in range(len(grp)):
            for j in range(i + 1, len(grp)):
                out.append((grp[i], grp[j]))
    return out


def hammocks(g: Graph, paths: Optional[list[SuspendedPath]] = None) -> list[Hammock]:
    if paths is None:
        paths = suspended_paths(g)
    by_ends: dict[tuple[int, int], dict[int, list[SuspendedPath]]] = {}
    for p in paths:
        a, b = p.endpoints
        key = (min(a, b), max(a, b))
        by_ends.setdefault(key, {}).setdefault(p.length, []).append(p)
    out = []
    for (a, b), by_len in sorted(by_ends.items()):
        if g.has_edge(a, b):
            continue
        for p2 in by_len.get(2, []):
            for p3 in by_len.get(3, []):
                out.append(Hammock((a, b), p2, p3))
    return out


def structure_report(g: Graph) -> StructureReport:
    cuts, blocks = cut_vertices_and_blocks(g)
    paths = suspended_paths(g)
    rep = StructureReport(
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        connected=g.is_connected(),
        two_connected=g.is_connected() and not cuts and g.n >= 3,
        cut_vertices=cuts,
        blocks=blocks,
        suspended_paths=paths,
        hammocks=hammocks(g, paths),
        twin_pairs=twin_pairs(paths),
    )
    return rep


def find_long_suspended_path(g: Graph, l: int) -> Optional[SuspendedPath]:
    """A longest suspended path, provided its length is >= l+1; None otherwise.

    For 2-connected planar graphs of girth >= 5l+1 with a 3+-vertex, a
    suitable path always exists; the search itself works on any graph
    meeting the stated degree preconditions.
    """
    cuts, _ = cut_vertices_and_blocks(g)
    if not g.is_connected() or cuts:
        raise GraphError("long-path extraction expects a 2-connected graph")
    if g.min_degree() < 2 or g.max_degree() < 3:
        raise GraphError("long-path extraction expects min degree 2 and a 3+-vertex")
    paths = suspended_paths(g)
    if not paths:
        return None
    best = max(paths, key=lambda p: p.length)
    return best if best.length >= l + 1 else None


def remove_suspended_path(g: Graph, p: SuspendedPath) -> tuple[Graph, list[int]]:
    """G \\ P: delete the internal vertices and edges of P.

    Returns the reduced graph and the old-id map. When P has no internal
    vertex (length 1), the single edge is removed instead.
    """
    if p.length == 1:
        u, v = p.endpoints
        return g.remove_edge(u, v), list(range(g.n))
    return g.remove_vertices(p.internal)
