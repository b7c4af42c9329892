"""Exact computation and certification of the fractional domatic number.

The primal LP packs dominating sets with per-vertex load at most 1; its
dual asks for nonnegative vertex weights giving every dominating set
weight at least 1 (a fractional bottleneck).  Every result carries both
certificates and they are verified, in exact rationals, before being
returned: the primal by direct constraint checking, the dual by an
independent branch-and-bound over dominating sets.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .domset import (CapExceeded, coverage, domination_number,
                     enumerate_minimal_dominating_sets, is_dominating,
                     min_weight_dominating_set, verify_bottleneck)
from .graphs import Graph, mask_of, mask_to_list
from .iso import group_closure, orbits
from .structure import Hammock


class CertificateError(ValueError):
    pass


@dataclass
class PrimalCertificate:
    """Columns (dominating-set bitmask, weight) with per-vertex load <= 1;
    the objective is the total weight."""

    columns: list[tuple[int, Fraction]]
    objective: Fraction

    def to_json(self) -> dict:
        return {
            "type": "primal",
            "value": [str(self.objective.numerator), str(self.objective.denominator)],
            "columns": [{"set": mask_to_list(s), "x": [str(x.numerator), str(x.denominator)]}
                        for s, x in self.columns],
        }


@dataclass
class DualCertificate:
    """Nonnegative vertex weights; valid iff every dominating set has
    weight >= 1, certifying fdom <= total."""

    weights: list[Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def to_json(self) -> dict:
        return {
            "type": "dual",
            "value": [str(self.total.numerator), str(self.total.denominator)],
            "weights": [[str(w.numerator), str(w.denominator)] for w in self.weights],
        }


@dataclass
class FdomResult:
    value: Fraction
    primal: PrimalCertificate
    dual: DualCertificate


def _frac_from_pair(pair) -> Fraction:
    return Fraction(int(pair[0]), int(pair[1]))


def certificate_from_json(obj: dict) -> PrimalCertificate | DualCertificate:
    if obj.get("type") == "primal":
        cols = [(mask_of(c["set"]), _frac_from_pair(c["x"])) for c in obj["columns"]]
        return PrimalCertificate(cols, _frac_from_pair(obj["value"]))
    if obj.get("type") == "dual":
        return DualCertificate([_frac_from_pair(w) for w in obj["weights"]])
    raise CertificateError("unknown certificate type")


def weights_to_json(weights: Sequence[Fraction]) -> dict:
    return {"weights": [[str(w.numerator), str(w.denominator)] for w in weights]}


def weights_from_json(obj: dict) -> list[Fraction]:
    return [_frac_from_pair(w) for w in obj["weights"]]


def verify_primal(g: Graph, cert: PrimalCertificate) -> tuple[bool, str]:
    """Check domination of every column, nonnegativity, per-vertex loads
    <= 1 and the objective arithmetic.  Returns (ok, reason)."""
    total = Fraction(0)
    loads = [Fraction(0)] * g.n
    for s, x in cert.columns:
        if x < 0:
            return False, f"negative weight on column {mask_to_list(s)}"
        if not is_dominating(g, s):
            return False, f"column {mask_to_list(s)} is not dominating"
        total += x
        for v in mask_to_list(s):
            loads[v] += x
    for v, load in enumerate(loads):
        if load > 1:
            return False, f"load {load} > 1 at vertex {v}"
    if total != cert.objective:
        return False, f"objective mismatch: {total} != {cert.objective}"
    return True, "ok"


def verify_dual(g: Graph, cert: DualCertificate) -> tuple[bool, str]:
    ok, total, minw = verify_bottleneck(g, cert.weights)
    if not ok:
        return False, f"a dominating set has weight {minw} < 1"
    return True, "ok"


class _PackingMaster:
    """Warm-startable simplex tableau for the dominating-set packing LP
    (maximise the total weight of the chosen columns, per-vertex load <= 1).

    Column layout: the n slack columns first (their block is B^-1, used to
    price appended columns), then one structural column per dominating set.
    The all-slack basis is feasible, so no phase 1 is ever needed.
    """

    def __init__(self, g: Graph, bland_after: int = 40):
        self.g = g
        self.n = g.n
        self.columns: list[int] = []
        self.tab = [[Fraction(1) if j == r else Fraction(0) for j in range(g.n)]
                    for r in range(g.n)]
        self.rhs = [Fraction(1)] * g.n
        self.z = [Fraction(0)] * g.n
        self.basis = list(range(g.n))
        self.bland_after = bland_after

    def add_column(self, mask: int) -> None:
        col = [sum((row[v] for v in mask_to_list(mask)), Fraction(0))
               for row in self.tab]
        red = sum((self.z[v] for v in mask_to_list(mask)), Fraction(0)) - 1
        for row, val in zip(self.tab, col):
            row.append(val)
        self.z.append(red)
        self.columns.append(mask)

    def _pivot(self, row: int, col: int) -> None:
        piv = self.tab[row][col]
        self.tab[row] = [v / piv for v in self.tab[row]]
        self.rhs[row] /= piv
        for r in range(self.n):
            if r != row and self.tab[r][col] != 0:
                f = self.tab[r][col]
                self.tab[r] = [a - f * p for a, p in zip(self.tab[r], self.tab[row])]
                self.rhs[r] -= f * self.rhs[row]
        if self.z[col] != 0:
            f = self.z[col]
            self.z = [a - f * p for a, p in zip(self.z, self.tab[row])]
        self.basis[row] = col

    def reoptimize(self) -> None:
        ncols = len(self.z)
        degenerate_run = 0
        while True:
            col = -1
            if degenerate_run < self.bland_after:
                best = Fraction(0)
                for j in range(ncols):
                    if self.z[j] < best:
                        best = self.z[j]
                        col = j
            else:  # Bland's rule: guaranteed termination
                for j in range(ncols):
                    if self.z[j] < 0:
                        col = j
                        break
            if col < 0:
                return
            row, best_ratio = -1, None
            for r in range(self.n):
                if self.tab[r][col] > 0:
                    ratio = self.rhs[r] / self.tab[r][col]
                    if best_ratio is None or ratio < best_ratio or (
                            ratio == best_ratio and self.basis[r] < self.basis[row]):
                        row, best_ratio = r, ratio
            if row < 0:  # packing LP is bounded by the loads; cannot happen
                raise CertificateError("internal: packing master unbounded")
            degenerate_run = degenerate_run + 1 if best_ratio == 0 else 0
            self._pivot(row, col)

    def duals(self) -> list[Fraction]:
        return [self.z[v] for v in range(self.n)]

    def value(self) -> Fraction:
        return sum((self.rhs[r] for r in range(self.n) if self.basis[r] >= self.n),
                   Fraction(0))

    def primal(self) -> list[Fraction]:
        xs = [Fraction(0)] * len(self.columns)
        for r in range(self.n):
            if self.basis[r] >= self.n:
                xs[self.basis[r] - self.n] = self.rhs[r]
        return xs


def _solve_master(g: Graph, columns: list[int]) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    master = _PackingMaster(g)
    for col in columns:
        master.add_column(col)
    master.reoptimize()
    return master.value(), master.primal(), master.duals()


def _result_from_master(g: Graph, master: "_PackingMaster",
                        check_dual_globally: bool = True) -> FdomResult:
    value, xs, duals = master.value(), master.primal(), master.duals()
    primal = PrimalCertificate(
        [(s, x) for s, x in zip(master.columns, xs) if x > 0], value)
    dual = DualCertificate(duals)
    ok, why = verify_primal(g, primal)
    if not ok:
        raise CertificateError(f"primal verification failed: {why}")
    if check_dual_globally:
        ok, why = verify_dual(g, dual)
        if not ok:
            raise CertificateError(f"dual verification failed: {why}")
    if dual.total != value:
        raise CertificateError("strong duality not witnessed")
    return FdomResult(value, primal, dual)


def fdom_exact(g: Graph, cap: int = 20) -> FdomResult:
    """fdom by full enumeration of minimal dominating sets.

    Columns can be restricted to minimal sets: any dominating set contains
    a minimal one, and shifting mass down to the subset never violates a
    load constraint.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    master = _PackingMaster(g)
    for col in enumerate_minimal_dominating_sets(g, cap=cap):
        master.add_column(col)
    master.reoptimize()
    return _result_from_master(g, master)


def _greedy_domatic_columns(g: Graph) -> list[int]:
    """A quick family of dominating sets covering every vertex at least once
    (greedy domatic partition), used to warm start column generation."""
    full = (1 << g.n) - 1
    remaining = full
    cols = []
    while remaining and coverage(g, remaining) == full:
        s, covered = 0, 0
        for v in sorted(mask_to_list(remaining), key=lambda x: -g.degree(x)):
            if g.closed_mask[v] & ~covered:
                s |= 1 << v
                covered |= g.closed_mask[v]
        cols.append(_complete_to_dominating(g, s))
        remaining &= ~cols[-1]
    if remaining:
        cols.append(_complete_to_dominating(g, remaining))
    return cols


def _complete_to_dominating(g: Graph, s: int) -> int:
    full = (1 << g.n) - 1
    covered = coverage(g, s)
    while covered != full:
        v = next(iter(mask_to_list(full & ~covered)))
        best = max(mask_to_list(g.closed_mask[v]),
                   key=lambda u: (g.closed_mask[u] & ~covered).bit_count())
        s |= 1 << best
        covered |= g.closed_mask[best]
    return s


def fdom_colgen(g: Graph, max_iter: int = 10000) -> FdomResult:
    """fdom by column generation: restricted master over a growing pool of
    dominating sets, priced by a minimum-weight dominating set under the
    master's dual weights.  Pricing weight >= 1 proves dual feasibility,
    hence optimality."""
    if g.n == 0:
        raise ValueError("empty graph")
    master = _PackingMaster(g)
    seen: set[int] = set()
    for col in _greedy_domatic_columns(g) + [g.closed_mask[v] | (1 << v) for v in range(g.n)]:
        col = _complete_to_dominating(g, col)
        if col not in seen:
            seen.add(col)
            master.add_column(col)
    for it in range(max_iter):
        master.reoptimize()
        new_col, w = min_weight_dominating_set(g, master.duals())
        if w >= 1:
            # the master duals are feasible for the full LP: optimal
            return _result_from_master(g, master)
        if new_col in seen:
            raise CertificateError("internal: priced a column already in the pool")
        seen.add(new_col)
        master.add_column(new_col)
    # the restricted master bounds below; duals scaled by the pricing weight
    # form a valid bottleneck bounding above (delta+1 when the weight is 0)
    lower = master.value()
    upper = (sum(master.duals(), Fraction(0)) / w if w > 0
             else Fraction(g.min_degree() + 1))
    raise CapExceeded(
        f"column generation did not converge in {max_iter} iterations; "
        f"fdom in [{lower}, {upper}]")


# -- closed-form certificates -----------------------------------------


def neighbourhood_certificate(g: Graph, v: Optional[int] = None) -> DualCertificate:
    """Weight 1 on a closed neighbourhood (of a minimum-degree vertex by
    default): every dominating set meets it, so fdom <= deg(v)+1."""
    if v is None:
        v = min(range(g.n), key=g.degree)
    w = [Fraction(0)] * g.n
    for u in mask_to_list(g.closed_mask[v]):
        w[u] = Fraction(1)
    return DualCertificate(w)


def uniform_certificate(g: Graph) -> DualCertificate:
    """Weight 1/gamma everywhere: every dominating set has >= gamma
    vertices, so fdom <= n/gamma."""
    gamma, _ = domination_number(g)
    return DualCertificate([Fraction(1, gamma)] * g.n)


def hammock_certificate(g: Graph, hammock: Hammock) -> DualCertificate:
    """Weight 1/2 on the five vertices of a hammock's C5: total 5/2."""
    w = [Fraction(0)] * g.n
    for v in hammock.cycle_vertices():
        w[v] = Fraction(1, 2)
    return DualCertificate(w)


def girth6_certificate(n: int) -> DualCertificate:
    """The closed-form bottleneck for the girth-6 family member G_n:
    1/(2n) on the 2n hubs, 1/(n(2n-1)) elsewhere; total (5n-2)/(2n-1)."""
    if n < 2:
        raise CertificateError("girth-6 family needs n >= 2")
    hubs = 2 * n
    rest = n * (n - 1) + 2 * n * n
    w = [Fraction(1, 2 * n)] * hubs + [Fraction(1, n * (2 * n - 1))] * rest
    return DualCertificate(w)


def kmn_dual_certificate(m: int, n: int) -> DualCertificate:
    """K_{m,n} (m >= n >= 2): 1/m on the m-side, 1-1/m on the n-side;
    total 1 + n(1-1/m)."""
    if not (m >= n >= 2):
        raise CertificateError("requires m >= n >= 2")
    return DualCertificate([Fraction(1, m)] * m + [1 - Fraction(1, m)] * n)


def kmn_primal_certificate(m: int, n: int) -> PrimalCertificate:
    """K_{m,n} pairs {a,b} at weight 1/m plus the whole m-side at 1-n/m."""
    if not (m >= n >= 2):
        raise CertificateError("requires m >= n >= 2")
    cols = [(mask_of([a, m + b]), Fraction(1, m)) for a in range(m) for b in range(n)]
    if m > n:
        cols.append((mask_of(range(m)), 1 - Fraction(n, m)))
    obj = sum(x for _, x in cols)
    return PrimalCertificate(cols, obj)


def hnd_certificate(n: int, d: int) -> DualCertificate:
    """The incidence-graph bottleneck: w_A = 1/m with
    m = round((ln d - 2 ln ln d) * q) and q = n/d - 1, w_B = 1/C(n-m, d).

    The rounding is heuristic, so the certificate must be re-verified by
    the caller (fdom-lp does so through verify_bottleneck); it is never
    trusted as-is.
    """
    if not (1 <= d < n) or n % d:
        raise CertificateError("requires d | n and 1 <= d < n")
    q = n // d - 1
    if q < 1:
        raise CertificateError("requires n >= 2d")
    m_real = (math.log(d) - 2 * math.log(math.log(d))) * q if d > 1 else 0.0
    m = max(1, round(m_real))
    if m > n - d:
        raise CertificateError("rounded m leaves no room for the B-side bound")
    wa = Fraction(1, m)
    wb = Fraction(1, math.comb(n - m, d))
    return DualCertificate([wa] * n + [wb] * math.comb(n, d))


def closed_form_certificate(kind: str, **kw):
    """Dispatch: neighbourhood(g[, v]) | uniform(g) | hammock(g, hammock) |
    girth6(n) | kmn_dual(m, n) | kmn_primal(m, n) | hnd(n, d)."""
    table = {
        "neighbourhood": neighbourhood_certificate,
        "uniform": uniform_certificate,
        "hammock": hammock_certificate,
        "girth6": girth6_certificate,
        "kmn_dual": kmn_dual_certificate,
        "kmn_primal": kmn_primal_certificate,
        "hnd": hnd_certificate,
    }
    if kind not in table:
        raise CertificateError(f"unknown certificate kind {kind!r}")
    return table[kind](**kw)


# -- symmetry-based primal certificates --------------------------------


def symmetric_certificate(g: Graph, generators: list[tuple[int, ...]],
                          d_min: int, orbit_cap: int = 100000) -> PrimalCertificate:
    """Uniform weights over the orbit of a minimum dominating set under the
    group generated by validated automorphisms acting transitively on the
    vertices; objective n/|d_min|, per-vertex load exactly 1."""
    for perm in generators:
        if sorted(perm) != list(range(g.n)):
            raise CertificateError("generator is not a permutation of the vertices")
        for u, v in g.edges():
            if not g.has_edge(perm[u], perm[v]):
                raise CertificateError("generator is not an automorphism")
    if len(orbits(g.n, generators)) != 1:
        raise CertificateError("generated group is not vertex-transitive")
    if not is_dominating(g, d_min):
        raise CertificateError("seed set is not dominating")
    gamma = d_min.bit_count()
    seen = {d_min}
    frontier = [d_min]
    while frontier:
        nxt = []
        for s in frontier:
            verts = mask_to_list(s)
            for perm in generators:
                t = mask_of(perm[v] for v in verts)
                if t not in seen:
                    if len(seen) >= orbit_cap:
                        raise CapExceeded("orbit size exceeds cap")
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    orbit = sorted(seen)
    # group-averaging gives load gamma/n per vertex; scale to load 1
    x = Fraction(g.n, gamma * len(orbit))
    cert = PrimalCertificate([(s, x) for s in orbit], Fraction(g.n, gamma))
    loads = [Fraction(0)] * g.n
    for s, xs in cert.columns:
        for v in mask_to_list(s):
            loads[v] += xs
    if any(load != 1 for load in loads):
        raise CertificateError("orbit loads are not uniform; group action too small")
    return cert


# -- the probabilistic lower-bound sampler -----------------------------


@dataclass
class SampleReport:
    trials: int
    frequencies: list[Fraction]
    max_frequency: Fraction
    analytic_bound: Fraction
    all_dominating: bool


def sample_lnbound(g: Graph, p: Fraction, trials: int, seed: int = 0) -> SampleReport:
    """Monte Carlo check of the random-set bound: include each vertex with
    probability p, then add every vertex not dominated by the sample.  Each
    resulting set dominates by construction; membership frequency compares
    against p + (1-p)^(delta+1).

    Randomness comes from random.Random(seed) (Mersenne Twister), fixed
    across platforms; Bernoulli draws use integer arithmetic on p's
    numerator/denominator, so no float enters the sampling path.
    """
    if not (0 <= p <= 1):
        raise ValueError("p must be in [0,1]")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    num, den = p.numerator, p.denominator
    counts = [0] * g.n
    all_dom = True
    full = (1 << g.n) - 1
    for _ in range(trials):
        x = 0
        for v in range(g.n):
            if rng.randrange(den) < num:
                x |= 1 << v
        covered = coverage(g, x)
        d = x | (full & ~covered)
        all_dom &= is_dominating(g, d)
        for v in mask_to_list(d):
            counts[v] += 1
    freqs = [Fraction(c, trials) for c in counts]
    delta = g.min_degree()
    bound = p + (1 - p) ** (delta + 1)
    return SampleReport(trials, freqs, max(freqs), bound, all_dom)


# -- dominating (p:q)-colouring search ---------------------------------


def pq_colouring_exists(g: Graph, p: int, q: int,
                        node_cap: int = 20_000_000) -> Optional[list[frozenset[int]]]:
    """Exhaustive search for a dominating (p:q)-colouring: q-subsets of [p]
    per vertex such that every closed neighbourhood spans all p colours.

    Vertices are processed in decreasing-degree order; a branch is pruned
    when some closed neighbourhood can no longer span the palette.  Returns
    a witness assignment (1-based colour sets) or None.
    """
    if not (1 <= q <= p):
        raise ValueError("needs 1 <= q <= p")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    choices = [frozenset(c) for c in combinations(range(1, p + 1), q)]
    assigned: dict[int, frozenset[int]] = {}
    nodes = 0

    def span_feasible() -> bool:
        for v in range(g.n):
            seen: set[int] = set()
            todo = 0
            for u in mask_to_list(g.closed_mask[v]):
                if u in assigned:
                    seen |= assigned[u]
                else:
                    todo += 1
            if len(seen) + q * todo < p:
                return False
        return True

    def backtrack(i: int) -> Optional[list[frozenset[int]]]:
        nonlocal nodes
        if i == g.n:
            return [assigned[v] for v in range(g.n)]
        v = order[i]
        for ch in choices:
            nodes += 1
            if nodes > node_cap:
                raise CapExceeded("colouring search cap exceeded")
            assigned[v] = ch
            if span_feasible():
                res = backtrack(i + 1)
                if res is not None:
                    return res
            del assigned[v]
        return None

    return backtrack(0)


def verify_pq_colouring(g: Graph, p: int, q: int,
                        phi: Sequence[frozenset[int]]) -> bool:
    if len(phi) != g.n or any(len(s) != q or not s <= set(range(1, p + 1)) for s in phi):
        return False
    for v in range(g.n):
        seen: set[int] = set()
        for u in mask_to_list(g.closed_mask[v]):
            seen |= phi[u]
        if len(seen) != p:
            return False
    return True
