"""Chromatic machinery and the hardness-reduction checks.

fractional_chromatic solves the covering LP over maximal independent sets
(full enumeration up to a size cap, column generation beyond), with the
dual verified by an independent max-weight-independent-set search.
chromatic_number is an exact DSATUR-ordered branch-and-bound with a clique
lower bound and an optional time budget; when the budget runs out it
reports bounds instead of guessing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .domset import CapExceeded
from .fdom import FdomResult, fdom_colgen, fdom_exact
from .generators import graph_square, join_with_clique, split_construction
from .graphs import Graph, mask_to_list
from .simplex import simplex_exact


@dataclass
class FractionalChromaticResult:
    value: Fraction
    classes: list[tuple[int, Fraction]]  # (independent-set mask, weight)
    clique_weights: list[Fraction]       # dual witness, max ind-set weight <= 1


@dataclass
class ChromaticResult:
    lower: int
    upper: int
    colouring: Optional[list[int]]  # a proper upper-bound witness

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise CapExceeded(f"chromatic number only bracketed in [{self.lower},{self.upper}]")
        return self.lower


def _is_independent(g: Graph, mask: int) -> bool:
    for v in mask_to_list(mask):
        if g.nbr_mask[v] & mask:
            return False
    return True


def maximal_independent_sets(g: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting, run on non-adjacency."""
    non_adj = [~(g.nbr_mask[v] | (1 << v)) & ((1 << g.n) - 1) for v in range(g.n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        u = max(mask_to_list(pivot_pool), key=lambda w: (non_adj[w] & p).bit_count())
        for v in mask_to_list(p & ~non_adj[u]):
            bk(r | (1 << v), p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << g.n) - 1, 0)
    return out


def max_weight_independent_set(g: Graph, weights: Sequence[Fraction]) -> tuple[int, Fraction]:
    """Exact branch-and-bound; weight-0 vertices are never needed."""
    order = sorted(range(g.n), key=lambda v: -weights[v])
    best_mask, best_w = 0, Fraction(0)

    def search(i: int, avail: int, mask: int, w: Fraction, rest: Fraction) -> None:
        nonlocal best_mask, best_w
        if w > best_w:
            best_mask, best_w = mask, w
        if w + rest <= best_w:
            return
        for j in range(i, len(order)):
            v = order[j]
            if not (avail >> v) & 1 or weights[v] <= 0:
                continue
            rest_after = rest - weights[v]
            search(j + 1, avail & ~(g.nbr_mask[v] | (1 << v)),
                   mask | (1 << v), w + weights[v], rest_after)
            rest = rest_after
            avail &= ~(1 << v)
            if w + rest <= best_w:
                return

    total = sum((w for w in weights if w > 0), Fraction(0))
    search(0, (1 << g.n) - 1, 0, Fraction(0), total)
    return best_mask, best_w


def _greedy_colouring_classes(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    classes: list[int] = []
    for v in order:
        for i, cls in enumerate(classes):
            if not (g.nbr_mask[v] & cls):
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
    # grow each class to a maximal independent set
    out = []
    for cls in classes:
        for v in range(g.n):
            if not ((cls >> v) & 1) and not (g.nbr_mask[v] & cls):
                cls |= 1 << v
        out.append(cls)
    return out


def fractional_chromatic(g: Graph, enum_cap: int = 25,
                         max_iter: int = 10000) -> FractionalChromaticResult:
    """Exact chi_f via the covering LP over independent sets.

    The dual clique weights are certified by an independent branch-and-bound:
    no independent set may carry weight above 1.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n <= enum_cap:
        sets = maximal_independent_sets(g)
        value, xs, ys = _solve_covering(g, sets)
        _check_chi_f(g, sets, value, xs, ys)
        return FractionalChromaticResult(
            value, [(s, x) for s, x in zip(sets, xs) if x > 0], ys)
    pool = _greedy_colouring_classes(g)
    for _ in range(max_iter):
        value, xs, ys = _solve_covering(g, pool)
        best_mask, best_w = max_weight_independent_set(g, ys)
        if best_w <= 1:
            _check_chi_f(g, pool, value, xs, ys)
            return FractionalChromaticResult(
                value, [(s, x) for s, x in zip(pool, xs) if x > 0], ys)
        pool.append(best_mask)
    raise CapExceeded(f"chi_f column generation did not converge in {max_iter} iterations")


def _solve_covering(g: Graph, sets: list[int]):
    # min sum x, Ax >= 1, x >= 0  ==  max sum(-x), -Ax <= -1
    c = [Fraction(-1)] * len(sets)
    rows = [[Fraction(-1) if (s >> v) & 1 else Fraction(0) for s in sets]
            for v in range(g.n)]
    b = [Fraction(-1)] * g.n
    res = simplex_exact(c, rows, b)
    return -res.value, res.x, res.y


def _check_chi_f(g: Graph, sets: list[int], value: Fraction,
                 xs: list[Fraction], ys: list[Fraction]) -> None:
    cover = [Fraction(0)] * g.n
    total = Fraction(0)
    for s, x in zip(sets, xs):
        if x < 0 or not _is_independent(g, s):
            raise CapExceeded("internal: bad covering-LP witness")
        total += x
        for v in mask_to_list(s):
            cover[v] += x
    if total != value or any(cv < 1 for cv in cover):
        raise CapExceeded("internal: covering-LP witness infeasible")
    _, w = max_weight_independent_set(g, ys)
    if w > 1 or sum(ys, Fraction(0)) != value:
        raise CapExceeded("internal: covering-LP dual not certified")


def witness_pq_colouring(g: Graph, res: FractionalChromaticResult,
                         ratio_p: int, ratio_q: int) -> tuple[int, int, list[frozenset[int]]]:
    """Turn an LP witness with value <= ratio into a proper (P:Q)-colouring
    with P/Q = ratio_p/ratio_q exactly, by replicating classes Q*x_S times,
    trimming over-covered vertices and padding with unused colours."""
    q = lcm(*[x.denominator for _, x in res.classes]) if res.classes else 1
    q = lcm(q, ratio_q)
    assignment: list[set[int]] = [set() for _ in range(g.n)]
    colour = 0
    for s, x in res.classes:
        copies = x * q
        assert copies.denominator == 1
        for _ in range(int(copies)):
            colour += 1
            for v in mask_to_list(s):
                assignment[v].add(colour)
    p = ratio_p * q // ratio_q
    if colour > p:
        raise ValueError("LP value exceeds the requested ratio")
    for v in range(g.n):
        if len(assignment[v]) < q:
            raise AssertionError("covering witness misses a vertex")
        assignment[v] = set(sorted(assignment[v])[:q])
    return p, q, [frozenset(a) for a in assignment]


# -- exact integral chromatic number -------------------------------------


def _greedy_clique(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        clique = 1 << v
        for u in sorted(g.adj[v], key=lambda w: -g.degree(w)):
            if (g.nbr_mask[u] & clique) == clique:
                clique |= 1 << u
        best = max(best, clique.bit_count())
    return best


def chromatic_number(g: Graph, cap: int = 40,
                     time_budget_ms: Optional[int] = None) -> ChromaticResult:
    """Exact chi by iterated k-colourability backtracking (DSATUR order,
    new-colour symmetry breaking).  With a time budget, may return bounds
    only; without one it runs to exactness."""
    if g.n > cap:
        raise CapExceeded(f"chromatic search capped at {cap} vertices")
    if g.n == 0:
        return ChromaticResult(0, 0, [])
    deadline = time.monotonic() + time_budget_ms / 1000 if time_budget_ms else None
    lower = max(_greedy_clique(g), 1)
    colouring = _greedy_colour_list(g)
    upper = max(colouring) + 1
    while lower < upper:
        if deadline and time.monotonic() > deadline:
            return ChromaticResult(lower, upper, colouring)
        k = upper - 1
        found = _k_colouring(g, k, deadline)
        if found == "timeout":
            return ChromaticResult(lower, upper, colouring)
        if found is None:
            lower = upper
            break
        colouring, upper = found, k
    return ChromaticResult(upper, upper, colouring)


def _greedy_colour_list(g: Graph) -> list[int]:
    col = [-1] * g.n
    for v in sorted(range(g.n), key=lambda u: -g.degree(u)):
        used = {col[w] for w in g.adj[v] if col[w] >= 0}
        c = 0
        while c in used:
            c += 1
        col[v] = c
    return col


def _k_colouring(g: Graph, k: int, deadline: Optional[float]):
    """A proper k-colouring or None; 'timeout' when the deadline passes."""
    col = [-1] * g.n
    nbr_cols = [set() for _ in range(g.n)]
    ticks = 0

    def pick() -> int:
        # most saturated first, ties by degree
        best, key = -1, None
        for v in range(g.n):
            if col[v] >= 0:
                continue
            cand = (len(nbr_cols[v]), g.degree(v))
            if key is None or cand > key:
                best, key = v, cand
        return best

    def bt(assigned: int, used: int):
        nonlocal ticks
        ticks += 1
        if deadline and ticks % 512 == 0 and time.monotonic() > deadline:
            return "timeout"
        if assigned == g.n:
            return list(col)
        v = pick()
        if len(nbr_cols[v]) >= k:
            return None
        for c in range(min(used + 1, k)):
            if c in nbr_cols[v]:
                continue
            col[v] = c
            touched = []
            for w in g.adj[v]:
                if col[w] < 0 and c not in nbr_cols[w]:
                    nbr_cols[w].add(c)
                    touched.append(w)
            res = bt(assigned + 1, max(used, c + 1))
            if res is not None:
                return res
            col[v] = -1
            for w in touched:
                nbr_cols[w].discard(c)
        return None

    return bt(0, 0)


# -- reduction, fullness and join reports ---------------------------------


@dataclass
class ReductionReport:
    chi_f: Fraction
    fdom_split: Fraction
    equivalence_holds: bool
    extension_checked: bool


def check_reduction(g: Graph) -> ReductionReport:
    """chi_f(G) <= 3  iff  fdom(S(G)) >= 3, checked exactly on both sides;
    when chi_f <= 3, also realises the colouring extension onto S(G) and
    verifies it dominates."""
    if g.min_degree() < 1:
        raise ValueError("reduction needs minimum degree >= 1")
    chi = fractional_chromatic(g)
    s = split_construction(g)
    fr = fdom_colgen(s) if s.n > 20 else fdom_exact(s)
    left = chi.value <= 3
    right = fr.value >= 3
    extension_checked = False
    if left:
        p, q, phi = witness_pq_colouring(g, chi, 3, 1)
        ext = list(phi) + [
            frozenset(range(1, p + 1)) - (phi[u] | phi[v])
            for u, v in g.edges()]
        from .distributions import FractionalColouring
        full = FractionalColouring(p, q, tuple(ext))
        for v in range(s.n):
            if full.spans(s, v) != p:
                raise AssertionError("extension recipe failed to dominate")
        extension_checked = True
    return ReductionReport(chi.value, fr.value, left == right, extension_checked)


@dataclass
class FullnessReport:
    degree: int
    chi_square_lower: int
    chi_square_upper: int
    chi_f_square: Optional[Fraction]
    dom_full: Optional[bool]
    fdom_full: Optional[bool]


def fullness_check(g: Graph, time_budget_ms: Optional[int] = None,
                   with_fractional: bool = True) -> FullnessReport:
    """For regular graphs: domatically full iff chi(G^2) = d+1, and
    fdom-full iff chi_f(G^2) = d+1.  Bounds are reported when the integral
    solver hits its budget; no value is ever guessed."""
    degs = set(g.degrees())
    if len(degs) != 1:
        raise ValueError("fullness check applies to regular graphs")
    d = degs.pop()
    sq = graph_square(g)
    chi = chromatic_number(sq, cap=64, time_budget_ms=time_budget_ms)
    dom_full = None
    if chi.lower > d + 1:
        dom_full = False
    elif chi.exact:
        dom_full = chi.value == d + 1
    chi_f: Optional[Fraction] = None
    fdom_full = None
    if with_fractional:
        chi_f = fractional_chromatic(sq).value
        fdom_full = chi_f == d + 1
    return FullnessReport(d, chi.lower, chi.upper, chi_f, dom_full, fdom_full)


@dataclass
class JoinReport:
    base_value: Fraction
    joined_value: Fraction
    t: int

    @property
    def holds(self) -> bool:
        return self.joined_value == self.base_value + self.t


def join_check(g: Graph, t: int) -> JoinReport:
    base = fdom_exact(g)
    joined = fdom_exact(join_with_clique(g, t))
    return JoinReport(base.value, joined.value, t)
