"""Dominating-set engines over bitmask vertex sets: verification, minimal
dominating set enumeration, exact domination number, minimum-weight
dominating sets (the LP pricing routine), domatic number, and fractional
bottleneck verification.

Vertex sets are Python-int bitmasks throughout; all weights are Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional

from .graphs import Graph, iter_mask, mask_to_list


class CapExceeded(RuntimeError):
    """An enumeration or search cap was exceeded; caps are explicit, never
    silently truncated."""


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex is in s or adjacent to s (s is a bitmask)."""
    covered = 0
    for v in iter_mask(s):
        covered |= g.closed_mask[v]
    return covered == (1 << g.n) - 1


def coverage(g: Graph, s: int) -> int:
    cov = 0
    for v in iter_mask(s):
        cov |= g.closed_mask[v]
    return cov


def enumerate_minimal_dominating_sets(g: Graph, cap: int = 20) -> Iterator[int]:
    """All inclusion-minimal dominating sets, each exactly once.

    Recursive cover search over the closed-neighbourhood hypergraph: branch
    on the dominators of the lowest uncovered vertex, excluding previously
    tried dominators on each branch; a final minimality filter removes the
    non-minimal covers the search can still produce.
    """
    if g.n > cap:
        raise CapExceeded(f"minimal dominating set enumeration capped at {cap} vertices")
    full = (1 << g.n) - 1
    if g.n == 0:
        yield 0
        return
    seen: set[int] = set()

    def minimal(s: int) -> bool:
        for v in iter_mask(s):
            rest = s & ~(1 << v)
            if coverage(g, rest) == full:
                return False
        return True

    def search(chosen: int, covered: int, banned: int) -> Iterator[int]:
        if covered == full:
            if chosen not in seen and minimal(chosen):
                seen.add(chosen)
                yield chosen
            return
        uncovered = full & ~covered
        v = (uncovered & -uncovered).bit_length() - 1
        cands = g.closed_mask[v] & ~banned
        newly_banned = banned
        for u in iter_mask(cands):
            yield from search(chosen | (1 << u), covered | g.closed_mask[u],
                              newly_banned)
            newly_banned |= 1 << u

    yield from search(0, 0, 0)


def _greedy_dominating(g: Graph) -> int:
    full = (1 << g.n) - 1
    chosen, covered = 0, 0
    while covered != full:
        best, gain = -1, -1
        for v in range(g.n):
            add = (g.closed_mask[v] & ~covered).bit_count()
            if add > gain:
                best, gain = v, add
        chosen |= 1 << best
        covered |= g.closed_mask[best]
    return chosen


def _packing_lower_bound(g: Graph, covered: int) -> int:
    """Greedy packing of uncovered vertices with disjoint closed
    neighbourhoods: each needs its own dominator."""
    full = (1 << g.n) - 1
    uncovered = full & ~covered
    blocked = 0
    count = 0
    for v in sorted(iter_mask(uncovered), key=lambda x: g.closed_mask[x].bit_count()):
        if g.closed_mask[v] & blocked:
            continue
        count += 1
        for u in iter_mask(g.closed_mask[v]):
            blocked |= g.closed_mask[u]
    return count


def domination_number(g: Graph) -> tuple[int, int]:
    """(gamma, witness bitmask): branch-and-bound, branching on the
    dominators of an uncovered vertex with the fewest candidates."""
    if g.n == 0:
        return 0, 0
    full = (1 << g.n) - 1
    best_set = _greedy_dominating(g)
    best = best_set.bit_count()

    def search(chosen: int, covered: int, excluded: int) -> None:
        nonlocal best, best_set
        size = chosen.bit_count()
        if covered == full:
            if size < best:
                best, best_set = size, chosen
            return
        if size + _packing_lower_bound(g, covered) >= best:
            return
        uncovered = full & ~covered
        # most-constrained uncovered vertex
        v_best, cands_best = -1, None
        for v in iter_mask(uncovered):
            c = g.closed_mask[v] & ~excluded
            if cands_best is None or c.bit_count() < cands_best.bit_count():
                v_best, cands_best = v, c
                if c.bit_count() <= 1:
                    break
        if not cands_best:
            return
        banned = excluded
        for u in sorted(iter_mask(cands_best),
                        key=lambda x: -(g.closed_mask[x] & ~covered).bit_count()):
            search(chosen | (1 << u), covered | g.closed_mask[u], banned)
            banned |= 1 << u

    search(0, 0, 0)
    return best, best_set


def min_weight_dominating_set(g: Graph, weights: list[Fraction]) -> tuple[int, Fraction]:
    """A dominating set of minimum total weight (exact branch-and-bound).

    Weight-0 vertices are free and included up front; ties among optimal
    sets are broken toward the lexicographically smallest bitmask.  The
    returned set need not be inclusion-minimal.
    """
    if len(weights) != g.n:
        raise ValueError("weight vector length mismatch")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    if g.n == 0:
        return 0, Fraction(0)
    full = (1 << g.n) - 1
    free = 0
    for v in range(g.n):
        if weights[v] == 0:
            free |= 1 << v
    start_cov = coverage(g, free)

    best_set = full
    best_w = sum(weights, Fraction(0))

    def lower_bound(covered: int, excluded: int) -> Optional[Fraction]:
        """Packing bound: disjoint closed neighbourhoods of uncovered
        vertices, each charged its cheapest available dominator."""
        bound = Fraction(0)
        blocked = 0
        uncovered = full & ~covered
        for v in iter_mask(uncovered):
            if g.closed_mask[v] & blocked:
                continue
            cands = g.closed_mask[v] & ~excluded
            if not cands:
                return None
            bound += min(weights[u] for u in iter_mask(cands))
            for u in iter_mask(g.closed_mask[v]):
                blocked |= g.closed_mask[u]
        return bound

    def search(chosen: int, covered: int, excluded: int, w: Fraction) -> None:
        nonlocal best_set, best_w
        if covered == full:
            if w < best_w or (w == best_w and chosen < best_set):
                best_set, best_w = chosen, w
            return
        lb = lower_bound(covered, excluded)
        if lb is None or w + lb > best_w:
            return
        uncovered = full & ~covered
        v_best, cands_best = -1, None
        for v in iter_mask(uncovered):
            c = g.closed_mask[v] & ~excluded
            if cands_best is None or c.bit_count() < cands_best.bit_count():
                v_best, cands_best = v, c
                if c.bit_count() <= 1:
                    break
        if not cands_best:
            return
        banned = excluded
        for u in sorted(iter_mask(cands_best), key=lambda x: weights[x]):
            search(chosen | (1 << u), covered | g.closed_mask[u], banned,
                   w + weights[u])
            banned |= 1 << u

    search(free, start_cov, free, Fraction(0))
    return best_set, best_w


def domatic_number(g: Graph, cap: int = 30) -> tuple[int, list[int]]:
    """(dom(G), partition as list of colour bitmasks): exhaustive backtracking
    with pruning, assigning colours in BFS order.

    Colours are symmetric; a vertex may only open colour c+1 if colours
    0..c are already in use.
    """
    if g.n > cap:
        raise CapExceeded(f"domatic search capped at {cap} vertices")
    if g.n == 0:
        return 0, []
    upper = g.min_degree() + 1
    for k in range(upper, 0, -1):
        part = _domatic_partition(g, k)
        if part is not None:
            return k, part
    raise AssertionError("unreachable: k=1 always feasible")


def _domatic_partition(g: Graph, k: int) -> Optional[list[int]]:
    """A partition of V into k dominating sets, or None."""
    if k == 1:
        return [(1 << g.n) - 1]
    order = g.bfs_order()
    colour = [-1] * g.n
    # seen_mask[v] = bitmask of colours present in N[v]
    seen_mask = [0] * g.n
    unassigned = [len(g.adj[v]) + 1 for v in range(g.n)]
    fullk = (1 << k) - 1

    def feasible(v: int) -> bool:
        return ((fullk & ~seen_mask[v]).bit_count() <= unassigned[v])

    def assign(v: int, c: int, undo: list[tuple[int, int, int]]) -> bool:
        colour[v] = c
        for w in mask_to_list(g.closed_mask[v]):
            undo.append((w, seen_mask[w], unassigned[w]))
            seen_mask[w] |= 1 << c
            unassigned[w] -= 1
            if not feasible(w):
                return False
        return True

    def undo_all(v: int, undo: list[tuple[int, int, int]]) -> None:
        colour[v] = -1
        for w, sm, ua in reversed(undo):
            seen_mask[w] = sm
            unassigned[w] = ua

    def backtrack(i: int, used: int) -> bool:
        if i == g.n:
            return used == k
        v = order[i]
        cands = list(range(used)) + ([used] if used < k else [])
        # remaining vertices must still be able to open the unused colours
        if used + (g.n - i) < k:
            return False
        for c in cands:
            undo: list[tuple[int, int, int]] = []
            if assign(v, c, undo):
                if backtrack(i + 1, max(used, c + 1)):
                    return True
            undo_all(v, undo)
        return False

    if backtrack(0, 0):
        part = [0] * k
        for v in range(g.n):
            part[colour[v]] |= 1 << v
        assert all(is_dominating(g, p) for p in part)
        return part
    return None


def verify_bottleneck(g: Graph, weights: list[Fraction]) -> tuple[bool, Fraction, Fraction]:
    """(valid, total weight, minimum dominating-set weight).

    Valid iff every dominating set has weight >= 1; a valid assignment
    certifies fdom(g) <= total.
    """
    if any(w < 0 for w in weights):
        return False, sum(weights, Fraction(0)), Fraction(0)
    _, w = min_weight_dominating_set(g, weights)
    return w >= 1, sum(weights, Fraction(0)), w
