"""The constructive 5/2 machinery.

construct52 builds, for any connected graph outside the exceptional
family with at least 2 vertices, an explicit random dominating set with
per-vertex membership exactly 2/5 and domination probability 1 at every
vertex of degree >= 2 (4/5 at degree-1 vertices).  The recursion applies
the first applicable rewrite below, each strictly decreasing the edge
count, so it terminates:

  cycle / K2 base
  cut vertex             -> glue the two sides' distributions
  adjacent 3+-vertices   -> delete the edge, or a catalog table if the
                            residue is exceptional
  C4 (twin 2-paths)      -> delete one middle, mirror it onto its twin
  twin suspended 3-paths -> delete one path, mirror onto its twin
  3-path not in a hammock-> contract it, then explicit mass surgery
  suspended path, len>=4 -> remove it, extend over the endpoint pair
  none of the above      -> the hammock base case (independent coins)

planar_girth_construct runs the large-girth pipeline at rate k/(3k-1):
per-block recursion peeling suspended paths of length >= 3k-2 down to a
cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .badfamily import bad_family_check
from .distributions import (DistributionError, DominatingDistribution,
                            FractionalColouring, colouring_to_distribution,
                            complete_to_r, constant_demand, cycle_distribution,
                            relabel, standard_demand, verify_f_dominating)
from .domset import CapExceeded, is_dominating
from .figures import EDGE_CASE_KEYS, QUASI_BY_MEMBER, exceptional_colouring
from .gluing import attach_suspended_path, glue_at_cutvertex
from .graphs import Graph, mask_to_list
from .iso import _iso_search, spanning_subgraph_embedding
from .structure import (SuspendedPath, cut_vertices_and_blocks, hammocks,
                        remove_suspended_path, structure_report,
                        suspended_paths, twin_pairs)

R25 = Fraction(2, 5)


class BadFamilyInput(ValueError):
    def __init__(self, member: int):
        super().__init__(f"input is exceptional-family member {member}")
        self.member = member


class ConstructionError(RuntimeError):
    pass


def construct52(g: Graph) -> DominatingDistribution:
    """An f-dominating 2/5-distribution for a connected non-exceptional
    graph on >= 2 vertices (demand 4/5 at degree-1 vertices, 1 elsewhere).
    The result is verified against that contract before being returned."""
    if g.n < 2:
        raise ValueError("construction needs at least 2 vertices")
    if not g.is_connected():
        raise ValueError("construction needs a connected graph")
    member = bad_family_check(g)
    if member is not None:
        raise BadFamilyInput(member)
    d = _construct(g)
    ok, why = verify_f_dominating(g, d, standard_demand(g), R25)
    if not ok:
        raise ConstructionError(f"postcondition violated: {why}")
    return d


def _construct(g: Graph) -> DominatingDistribution:
    assert bad_family_check(g) is None
    if g.n == 2:
        return colouring_to_distribution(FractionalColouring(
            5, 2, (frozenset({1, 2}), frozenset({3, 4}))))
    degs = g.degrees()
    if all(d == 2 for d in degs):
        return _cycle_case(g)

    cuts, _ = cut_vertices_and_blocks(g)
    if cuts:
        return _cut_vertex_case(g, cuts[0])

    adj3 = [(u, v) for u, v in g.edges() if degs[u] >= 3 and degs[v] >= 3]
    if adj3:
        return _adjacent_hubs_case(g, adj3)

    c4 = _find_twin_2paths(g)
    if c4 is not None:
        return _twin_2path_case(g, *c4)

    paths = suspended_paths(g)
    twins3 = [(p, q) for p, q in twin_pairs(paths) if p.length == 3]
    if twins3:
        return _twin_3path_case(g, *twins3[0])

    lonely = _find_non_hammock_3path(g, paths)
    if lonely is not None:
        return _contract_3path_case(g, lonely)

    long_paths = [p for p in paths if p.length >= 4]
    if long_paths:
        return _long_path_case(g, long_paths)

    return base_case_hammock(g, hammock_base_annotations(g, paths))


# -- cycle and cut-vertex cases -----------------------------------------


def _cycle_case(g: Graph) -> DominatingDistribution:
    order = [0]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in sorted(g.adj[order[-1]]) if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    base = cycle_distribution(g.n)
    d = relabel(base, order)
    if d.membership(0) > R25:  # only C4 and C7, both exceptional
        raise ConstructionError("cycle with membership above 2/5")
    return complete_to_r(d, R25, g.n)


def _cut_vertex_case(g: Graph, v0: int) -> DominatingDistribution:
    comps: list[set[int]] = []
    seen = {v0}
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w != v0 and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    assert len(comps) >= 2
    side0 = comps[0] | {v0}
    side1 = set(range(g.n)) - comps[0]
    g0, map0 = g.induced(side0)
    g1, map1 = g.induced(side1)
    d0 = _side_distribution(g0, map0.index(v0))
    d1 = _side_distribution(g1, map1.index(v0))
    return glue_at_cutvertex(d0, g0, map0, d1, g1, map1, v0, R25)


def _side_distribution(g: Graph, v0: int) -> DominatingDistribution:
    """A 2/5-distribution for one side of a cut vertex: the standard
    construction when the side is not exceptional, else the marked-vertex
    table at v0 (domination 4/5 there, or 3/5 on the 4-cycle)."""
    member = bad_family_check(g)
    if member is None:
        return _construct(g)
    return _quasi_distribution(g, member, v0)


def _quasi_distribution(g: Graph, member: int, v0: int) -> DominatingDistribution:
    if member in QUASI_BY_MEMBER:
        for key in QUASI_BY_MEMBER[member]:
            entry = exceptional_colouring(key)
            for sigma in _iso_search(entry.graph, g, want_all=True):
                if sigma[entry.quasi_vertex] == v0:
                    return relabel(colouring_to_distribution(entry.phi), list(sigma))
        raise ConstructionError(
            f"no marked-vertex table reaches vertex {v0} of member {member}")
    # members 5..8 contain a spanning 7-cycle; rotate its table onto v0
    entry = exceptional_colouring("fig4d-C7-quasi")
    sigma = spanning_subgraph_embedding(entry.graph, g)
    if sigma is None:
        raise ConstructionError("expected a spanning 7-cycle in the exceptional member")
    j = sigma.index(v0)
    rotated = [sigma[(i + j) % 7] for i in range(7)]
    return relabel(colouring_to_distribution(entry.phi), rotated)


# -- edge deletion between adjacent hubs --------------------------------


def _adjacent_hubs_case(g: Graph, adj3: list[tuple[int, int]]) -> DominatingDistribution:
    for u, v in adj3:
        reduced = g.remove_edge(u, v)
        if bad_family_check(reduced) is None:
            # extra edges only help domination
            return _construct(reduced)
    return _catalog_case(g, EDGE_CASE_KEYS)


def _catalog_case(g: Graph, keys: list[str]) -> DominatingDistribution:
    """A catalog table applied through a spanning-subgraph embedding."""
    for key in keys:
        entry = exceptional_colouring(key)
        if entry.graph.n != g.n:
            continue
        sigma = spanning_subgraph_embedding(entry.graph, g)
        if sigma is not None:
            return relabel(colouring_to_distribution(entry.phi), list(sigma))
    raise ConstructionError("no catalog table embeds into this residue")


# -- C4: twin suspended 2-paths -----------------------------------------


def _find_twin_2paths(g: Graph) -> Optional[tuple[int, int]]:
    """Middles (m1, m2) of two twin suspended 2-paths forming a C4, if any.

    With no cut vertex and no adjacent hubs, any 4-cycle has exactly two
    opposite degree-2 corners, which are the twin middles.
    """
    degs = g.degrees()
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.has_edge(u, w):
                continue
            middles = [m for m in sorted(g.adj[u] & g.adj[w]) if degs[m] == 2]
            if len(middles) >= 2:
                return middles[0], middles[1]
    return None


def _twin_2path_case(g: Graph, m1: int, m2: int) -> DominatingDistribution:
    reduced, keep = g.remove_vertices([m1])
    if bad_family_check(reduced) is not None:
        # the graph is K_{2,4} or carries a spanning theta(2,2,5)
        return _catalog_case(g, ["fig6a-K24", "fig6b-theta225"])
    d = relabel(_construct(reduced), keep)
    return _mirror(d, {m1: m2})


def _mirror(d: DominatingDistribution, copies: dict[int, int]) -> DominatingDistribution:
    """Add each new vertex exactly to the atoms containing its twin."""
    out: dict[int, Fraction] = {}
    for s, p in d.atoms:
        t = s
        for new, old in copies.items():
            if (s >> old) & 1:
                t |= 1 << new
        out[t] = out.get(t, Fraction(0)) + p
    return DominatingDistribution.from_map(out)


# -- twin suspended 3-paths ---------------------------------------------


def _twin_3path_case(g: Graph, p: SuspendedPath, q: SuspendedPath) -> DominatingDistribution:
    u, v = p.internal
    u2, v2 = q.internal
    if q.vertices[0] != p.vertices[0]:
        u2, v2 = v2, u2  # align the twin's orientation with p's
    reduced, keep = g.remove_vertices([u, v])
    if bad_family_check(reduced) is not None:
        return _catalog_case(g, ["fig6c-theta334"])
    d = relabel(_construct(reduced), keep)
    return _mirror(d, {u: u2, v: v2})


# -- suspended 3-path outside any hammock: contraction -------------------


def _find_non_hammock_3path(g: Graph, paths: list[SuspendedPath]) -> Optional[SuspendedPath]:
    for p in paths:
        if p.length != 3:
            continue
        u, v = p.endpoints
        if not (g.adj[u] & g.adj[v]):
            return p
    return None


def _contract_3path_case(g: Graph, p: SuspendedPath) -> DominatingDistribution:
    u, x, y, v = p.vertices
    # contract the path into u: u inherits v's other neighbours
    edges = [(a, b) for a, b in g.edges()
             if a not in (x, y, v) and b not in (x, y, v)]
    edges += [(u, t) for t in g.adj[v] if t != y]
    contracted = Graph(g.n, edges)
    reduced, keep = contracted.remove_vertices([x, y, v])
    if bad_family_check(reduced) is not None:
        # the residue has a degree-4 vertex; the host carries theta(3,4,4)
        return _catalog_case(g, ["fig6e-theta344"])
    d_r = relabel(_construct(reduced), keep)

    # w in D' means both u and v in the lifted base set
    base: dict[int, Fraction] = {}
    for s, pr in d_r.atoms:
        t = s | (1 << v) if (s >> u) & 1 else s
        base[t] = base.get(t, Fraction(0)) + pr
    d0 = DominatingDistribution.from_map(base)

    nu, nv = g.closed_mask[u], g.closed_mask[v]
    p_u_bad = sum((pr for s, pr in d0.atoms if not (s & nu)), Fraction(0))
    p_v_bad = sum((pr for s, pr in d0.atoms if not (s & nv)), Fraction(0))

    out: dict[int, Fraction] = {}

    def put(mask: int, pr: Fraction) -> None:
        out[mask] = out.get(mask, Fraction(0)) + pr

    fifth = Fraction(1, 5)
    for s, pr in d0.atoms:
        u_dom, v_dom = bool(s & nu), bool(s & nv)
        u_in, v_in = bool((s >> u) & 1), bool((s >> v) & 1)
        if not u_dom:
            put(s | (1 << x), pr)
        elif not v_dom:
            put(s | (1 << y), pr)
        elif not u_in and not v_in:
            if p_v_bad >= fifth:
                put(s | (1 << x), pr)
            elif p_u_bad >= fifth:
                put(s | (1 << y), pr)
            else:
                put(s | (1 << x), pr / 2)
                put(s | (1 << y), pr / 2)
        else:
            put(s, pr)
    d = DominatingDistribution.from_map(out)
    for w in (x, y):
        if d.membership(w) > R25:
            raise ConstructionError("contraction surgery exceeded the rate")
    return complete_to_r(d, R25, g.n)


# -- long suspended paths ------------------------------------------------


def _long_path_case(g: Graph, long_paths: list[SuspendedPath]) -> DominatingDistribution:
    for p in long_paths:
        reduced, keep = remove_suspended_path(g, p)
        if bad_family_check(reduced) is None:
            d = relabel(_construct(reduced), keep)
            return attach_suspended_path(d, p, R25, g.n)
    # every removal lands on a 7-cycle: the host is its 5-path extension
    return _catalog_case(g, ["fig6d-C7-plus-5path"])


# -- the hammock base case (independent coins) ---------------------------


@dataclass
class HammockAnnotations:
    a0: list[int]
    a1: list[int]
    b0: list[int]
    b1: list[int]
    three_paths: list[SuspendedPath]


def hammock_base_annotations(g: Graph,
                             paths: Optional[list[SuspendedPath]] = None) -> HammockAnnotations:
    """Recover the expansion classes: hubs are the 3+-vertices, 2-path
    middles form A0, 3-path internals A1, hubs meeting a 3-path B1.
    Validates the base-case shape (paths of length 2 or 3 only, every
    3-path inside a hammock, non-adjacent hubs)."""
    if paths is None:
        paths = suspended_paths(g)
    degs = g.degrees()
    hubs = [v for v in range(g.n) if degs[v] >= 3]
    if not hubs:
        raise ConstructionError("base case needs a 3+-vertex")
    on_paths: set[int] = set()
    a0, a1, b1 = [], [], set()
    hams = hammocks(g, paths)
    hammock_3paths = {h.three_path.vertices for h in hams}
    for p in paths:
        on_paths |= set(p.internal)
        if p.length == 2:
            a0.append(p.vertices[1])
        elif p.length == 3:
            if p.vertices not in hammock_3paths:
                raise ConstructionError("a 3-path without its hammock partner")
            a1 += list(p.internal)
            b1 |= set(p.endpoints)
        else:
            raise ConstructionError(f"unexpected path length {p.length} in base case")
    if set(range(g.n)) - set(hubs) != on_paths:
        raise ConstructionError("a degree-2 vertex lies on no suspended path")
    for u, v in g.edges():
        if degs[u] >= 3 and degs[v] >= 3:
            raise ConstructionError("adjacent hubs in base case")
    return HammockAnnotations(sorted(a0), sorted(a1),
                              sorted(set(hubs) - b1), sorted(b1),
                              [p for p in paths if p.length == 3])


def base_case_hammock(g: Graph, ann: Optional[HammockAnnotations] = None,
                      coin_cap: int = 16) -> DominatingDistribution:
    """The explicit 2/5-distribution for expanded multigraphs: independent
    2/5-coins on the plain hubs, a shared 1/5-skip coin plus fair coins on
    the hammock hubs, then the deterministic and uniform fill-in rules for
    the subdivision vertices.  All coin outcomes are enumerated with exact
    probabilities; memberships end at most 2/5 and are completed to
    exactly 2/5."""
    if ann is None:
        ann = hammock_base_annotations(g)
    if len(ann.b0) + len(ann.b1) > coin_cap:
        raise CapExceeded(f"hammock base coins capped at {coin_cap} hubs")

    atom_map: dict[int, Fraction] = {}

    def add(mask: int, pr: Fraction) -> None:
        atom_map[mask] = atom_map.get(mask, Fraction(0)) + pr

    def expand_choices(mask: int, pr: Fraction,
                       choice_sets: list[list[int]]) -> None:
        if not choice_sets:
            add(mask, pr)
            return
        head, rest = choice_sets[0], choice_sets[1:]
        share = pr / len(head)
        for z in head:
            expand_choices(mask | (1 << z), share, rest)

    two5, three5 = Fraction(2, 5), Fraction(3, 5)
    b0_subsets: list[tuple[int, Fraction]] = [(0, Fraction(1))]
    for b in ann.b0:
        b0_subsets = [(m | (1 << b), p * two5) for m, p in b0_subsets] + \
                     [(m, p * three5) for m, p in b0_subsets]

    b1_branches: list[tuple[int, Fraction]] = [(0, Fraction(1, 5))]
    half = Fraction(1, 2)
    live: list[tuple[int, Fraction]] = [(0, Fraction(4, 5))]
    for b in ann.b1:
        live = [(m | (1 << b), p * half) for m, p in live] + \
               [(m, p * half) for m, p in live]
    b1_branches += live

    for b0set, p0 in b0_subsets:
        for b1set, p1 in b1_branches:
            hubset = b0set | b1set
            pr = p0 * p1
            # deterministic fill of the 2-path middles
            a0set = 0
            for v in ann.a0:
                if not (g.nbr_mask[v] & hubset):
                    a0set |= 1 << v
            # uncovered plain hubs pick a uniformly random 2-path middle
            choice_sets: list[list[int]] = []
            for b in ann.b0:
                if not ((b0set >> b) & 1) and not (g.nbr_mask[b] & a0set):
                    choice_sets.append(sorted(g.adj[b]))
            # 3-path rules
            base_mask = hubset | a0set
            for p in ann.three_paths:
                u, a, b, x = p.vertices
                u_in, x_in = bool((b1set >> u) & 1), bool((b1set >> x) & 1)
                if not u_in and x_in:
                    base_mask |= 1 << a
                if not x_in and u_in:
                    base_mask |= 1 << b
                if not u_in and not x_in:
                    choice_sets.append([a, b])
            expand_choices(base_mask, pr, choice_sets)

    d = DominatingDistribution.from_map(atom_map)
    for s, _ in d.atoms:
        if not is_dominating(g, s):
            raise ConstructionError("a base-case outcome fails to dominate")
    for v in range(g.n):
        if d.membership(v) > R25:
            raise ConstructionError(f"base-case membership above 2/5 at {v}")
    return complete_to_r(d, R25, g.n)


# -- the planar large-girth pipeline --------------------------------------


def planar_girth_construct(g: Graph, k: int) -> DominatingDistribution:
    """A dominating r-distribution with r = k/(3k-1) for graphs of minimum
    degree 2 and girth >= 15k-14 (planarity is assumed, not tested: it is
    only needed to guarantee that the long suspended paths exist).

    Verified to have membership exactly r and domination probability 1
    everywhere before being returned.
    """
    if k < 2:
        raise ValueError("pipeline needs k >= 2")
    if g.min_degree() < 2:
        raise ValueError("pipeline needs minimum degree 2")
    girth = g.girth()
    if girth is None or girth < 15 * k - 14:
        raise ValueError(f"girth {girth} below the required {15 * k - 14}")
    if not g.is_connected():
        raise ValueError("pipeline needs a connected graph")
    r = Fraction(k, 3 * k - 1)
    d = _planar_recurse(g, k, r)
    ok, why = verify_f_dominating(g, d, constant_demand(Fraction(1)), r)
    if not ok:
        raise ConstructionError(f"planar pipeline postcondition violated: {why}")
    return d


def _planar_recurse(g: Graph, k: int, r: Fraction) -> DominatingDistribution:
    if g.n == 2 and g.m == 1:
        # bridge base: endpoints each present with probability r, never both
        return DominatingDistribution.from_map({
            0b01: r, 0b10: r, 0: 1 - 2 * r})
    degs = g.degrees()
    if all(d == 2 for d in degs):
        order = [0]
        prev = -1
        while len(order) < g.n:
            nxt = [w for w in sorted(g.adj[order[-1]]) if w != prev]
            prev = order[-1]
            order.append(nxt[0])
        d = relabel(cycle_distribution(g.n), order)
        if d.membership(0) > r:
            raise ConstructionError("cycle too short for the target rate")
        return complete_to_r(d, r, g.n)
    cuts, _ = cut_vertices_and_blocks(g)
    if cuts:
        v0 = cuts[0]
        comp = _one_component(g, v0)
        side0 = comp | {v0}
        side1 = set(range(g.n)) - comp
        g0, map0 = g.induced(side0)
        g1, map1 = g.induced(side1)
        d0 = _planar_recurse(g0, k, r)
        d1 = _planar_recurse(g1, k, r)
        return glue_at_cutvertex(d0, g0, map0, d1, g1, map1, v0, r)
    p = _longest_suspended_path(g)
    if p is None or p.length < 3 * k - 2:
        raise ConstructionError(
            "no suspended path of length >= 3k-2 in a non-cycle block")
    reduced, keep = remove_suspended_path(g, p)
    d = relabel(_planar_recurse(reduced, k, r), keep)
    return attach_suspended_path(d, p, r, g.n)


def _one_component(g: Graph, v0: int) -> set[int]:
    start = next(v for v in range(g.n) if v != v0)
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w != v0 and w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def _longest_suspended_path(g: Graph) -> Optional[SuspendedPath]:
    paths = suspended_paths(g)
    return max(paths, key=lambda p: p.length) if paths else None


# -- the intersecting set family -----------------------------------------


@dataclass
class IntersectingFamilyReport:
    ground_size: int
    sets: dict[str, frozenset]
    set_size: int
    a_pair_intersection: int
    b_cross_intersection: int


def intersecting_family(a_size: int, b_size: int,
                        cap: int = 2_000_000) -> IntersectingFamilyReport:
    """The explicit set family over the product space [2]^A x [5]^(B+{beta}):
    every set has 2t/5 of the t ground elements, two A-sets share t/5, and
    any pair involving a B-set shares 4t/25.  All three identities are
    verified exactly before returning."""
    t = (2 ** a_size) * (5 ** (b_size + 1))
    if t > cap:
        raise CapExceeded(f"ground set of size {t} exceeds cap {cap}")
    a_names = [f"a{i}" for i in range(a_size)]
    b_names = [f"b{i}" for i in range(b_size)]
    omega = list(product(*([range(1, 3)] * a_size + [range(1, 6)] * (b_size + 1))))
    sets: dict[str, frozenset] = {}
    for i, a in enumerate(a_names):
        sets[a] = frozenset(w for w in omega if w[i] == 1 and w[-1] <= 4)
    for j, b in enumerate(b_names):
        sets[b] = frozenset(w for w in omega if w[a_size + j] <= 2)

    expect_size = Fraction(2 * t, 5)
    expect_aa = Fraction(t, 5)
    expect_bx = Fraction(4 * t, 25)
    for name, s in sets.items():
        if len(s) != expect_size:
            raise ConstructionError(f"|phi({name})| = {len(s)} != {expect_size}")
    for i in range(a_size):
        for j in range(i + 1, a_size):
            inter = len(sets[a_names[i]] & sets[a_names[j]])
            if inter != expect_aa:
                raise ConstructionError("A-pair intersection mismatch")
    for b in b_names:
        for other in a_names + b_names:
            if other == b:
                continue
            inter = len(sets[b] & sets[other])
            if inter != expect_bx:
                raise ConstructionError("B-cross intersection mismatch")
    return IntersectingFamilyReport(t, sets, int(expect_size),
                                    int(expect_aa), int(expect_bx))
