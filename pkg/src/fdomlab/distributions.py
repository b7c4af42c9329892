"""Finite-support random vertex sets with exact rational probabilities.

A distribution is a list of (vertex bitmask, probability) atoms summing to
exactly 1.  These are the f-dominating r-colourings of the constructive
machinery: per-vertex membership probability exactly r, per-vertex
domination probability at least the demand f(v).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Sequence

from .graphs import Graph, mask_of, mask_to_list


class DistributionError(ValueError):
    pass


@dataclass(frozen=True)
class DominatingDistribution:
    """Deduplicated support atoms (bitmask -> probability > 0), summing to 1."""

    atoms: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_map(atom_map: dict[int, Fraction]) -> "DominatingDistribution":
        cleaned = {s: p for s, p in atom_map.items() if p != 0}
        if any(p < 0 for p in cleaned.values()):
            raise DistributionError("negative atom probability")
        if sum(cleaned.values(), Fraction(0)) != 1:
            raise DistributionError("probabilities must sum to exactly 1")
        return DominatingDistribution(tuple(sorted(cleaned.items())))

    def as_map(self) -> dict[int, Fraction]:
        return dict(self.atoms)

    def membership(self, v: int) -> Fraction:
        return sum((p for s, p in self.atoms if (s >> v) & 1), Fraction(0))

    def dominated_prob(self, g: Graph, v: int) -> Fraction:
        nb = g.closed_mask[v]
        return sum((p for s, p in self.atoms if s & nb), Fraction(0))

    def hit_prob(self, mask: int) -> Fraction:
        """Probability that the random set intersects the given mask."""
        return sum((p for s, p in self.atoms if s & mask), Fraction(0))

    def to_json(self, r: Fraction) -> dict:
        return {
            "r": [str(r.numerator), str(r.denominator)],
            "atoms": [{"set": mask_to_list(s), "p": [str(p.numerator), str(p.denominator)]}
                      for s, p in self.atoms],
        }

    @staticmethod
    def from_json(obj: dict) -> tuple["DominatingDistribution", Fraction]:
        r = Fraction(int(obj["r"][0]), int(obj["r"][1]))
        atom_map: dict[int, Fraction] = {}
        for a in obj["atoms"]:
            s = mask_of(a["set"])
            p = Fraction(int(a["p"][0]), int(a["p"][1]))
            atom_map[s] = atom_map.get(s, Fraction(0)) + p
        return DominatingDistribution.from_map(atom_map), r


DemandFunction = Callable[[int], Fraction]


def constant_demand(value: Fraction) -> DemandFunction:
    return lambda v: value


def all_ones_demand() -> DemandFunction:
    return constant_demand(Fraction(1))


def standard_demand(g: Graph) -> DemandFunction:
    """Demand 4/5 at degree-1 vertices, 1 elsewhere."""
    return lambda v: Fraction(4, 5) if g.degree(v) == 1 else Fraction(1)


def verify_f_dominating(g: Graph, d: DominatingDistribution, f: DemandFunction,
                        r: Fraction) -> tuple[bool, str]:
    for v in range(g.n):
        if d.membership(v) != r:
            return False, f"membership {d.membership(v)} != {r} at vertex {v}"
        dom = d.dominated_prob(g, v)
        if dom < f(v):
            return False, f"domination {dom} < demand {f(v)} at vertex {v}"
    return True, "ok"


# -- fractional colourings ---------------------------------------------


@dataclass(frozen=True)
class FractionalColouring:
    """Assignment of a q-subset of [p] to every vertex (colours 1-based)."""

    p: int
    q: int
    assignment: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not (1 <= self.q <= self.p):
            raise DistributionError("needs 1 <= q <= p")
        for s in self.assignment:
            if len(s) != self.q or not s <= set(range(1, self.p + 1)):
                raise DistributionError("each vertex needs exactly q colours from [p]")

    def colour_class(self, i: int) -> int:
        return mask_of(v for v, s in enumerate(self.assignment) if i in s)

    def spans(self, g: Graph, v: int) -> int:
        seen: set[int] = set()
        for u in mask_to_list(g.closed_mask[v]):
            seen |= self.assignment[u]
        return len(seen)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q,
                "phi": [sorted(s) for s in self.assignment]}

    @staticmethod
    def from_json(obj: dict) -> "FractionalColouring":
        return FractionalColouring(obj["p"], obj["q"],
                                   tuple(frozenset(s) for s in obj["phi"]))


def colouring_to_distribution(phi: FractionalColouring) -> DominatingDistribution:
    """A uniformly random colour class: membership q/p for every vertex."""
    atom_map: dict[int, Fraction] = {}
    unit = Fraction(1, phi.p)
    for i in range(1, phi.p + 1):
        s = phi.colour_class(i)
        atom_map[s] = atom_map.get(s, Fraction(0)) + unit
    return DominatingDistribution.from_map(atom_map)


def distribution_to_colouring(d: DominatingDistribution, n: int) -> FractionalColouring:
    """Replicate atoms into p = lcm-of-denominators colour slots; requires a
    constant membership r, giving q = r*p colours per vertex."""
    r = d.membership(0) if n else Fraction(0)
    for v in range(n):
        if d.membership(v) != r:
            raise DistributionError("membership is not constant across vertices")
    p = lcm(*[pr.denominator for _, pr in d.atoms]) if d.atoms else 1
    q = r * p
    if q.denominator != 1:
        p = lcm(p, r.denominator)
        q = r * p
    q = int(q)
    assignment: list[set[int]] = [set() for _ in range(n)]
    slot = 1
    for s, pr in d.atoms:
        copies = pr * p
        assert copies.denominator == 1
        for _ in range(int(copies)):
            for v in mask_to_list(s):
                assignment[v].add(slot)
            slot += 1
    assert slot == p + 1
    return FractionalColouring(p, q, tuple(frozenset(a) for a in assignment))


# -- membership completion (derandomised) ------------------------------


def complete_to_r(d: DominatingDistribution, r: Fraction, n: int) -> DominatingDistribution:
    """Raise every membership to exactly r by deterministic event-splitting.

    For each vertex below r, atoms not containing the vertex are split, in
    sorted order, into a piece that gains the vertex and a piece that does
    not, with exact masses.  Each original atom's mass ends up on supersets
    of it, so domination probabilities never decrease; support grows by at
    most one atom per vertex.
    """
    atom_map = d.as_map()
    for v in range(n):
        have = sum((p for s, p in atom_map.items() if (s >> v) & 1), Fraction(0))
        if have > r:
            raise DistributionError(f"membership {have} exceeds target {r} at vertex {v}")
        need = r - have
        if need == 0:
            continue
        for s in sorted(atom_map):
            if (s >> v) & 1:
                continue
            p = atom_map[s]
            take = min(p, need)
            atom_map[s] = p - take
            grown = s | (1 << v)
            atom_map[grown] = atom_map.get(grown, Fraction(0)) + take
            need -= take
            if need == 0:
                break
        if need != 0:
            raise DistributionError("insufficient mass to complete membership")
        atom_map = {s: p for s, p in atom_map.items() if p != 0}
    return DominatingDistribution.from_map(atom_map)


def cycle_distribution(n: int) -> DominatingDistribution:
    """Uniform over the n rotations of the dominating set {0, 3, 6, ...} of
    the n-cycle: membership ceil(n/3)/n everywhere."""
    if n < 3:
        raise DistributionError("cycle needs n >= 3")
    base = list(range(0, n, 3))  # gaps of 3, final wrap gap <= 3: dominating
    atom_map: dict[int, Fraction] = {}
    for shift in range(n):
        s = mask_of((v + shift) % n for v in base)
        atom_map[s] = atom_map.get(s, Fraction(0)) + Fraction(1, n)
    return DominatingDistribution.from_map(atom_map)


def point_mass(mask: int) -> DominatingDistribution:
    return DominatingDistribution.from_map({mask: Fraction(1)})


def relabel(d: DominatingDistribution, mapping: Sequence[int]) -> DominatingDistribution:
    """Relabel atom vertices through mapping (local id -> global id)."""
    if list(mapping) == list(range(len(mapping))):
        return d
    out: dict[int, Fraction] = {}
    for s, p in d.atoms:
        t = 0
        u = s
        while u:
            low = u & -u
            t |= 1 << mapping[low.bit_length() - 1]
            u ^= low
        out[t] = out.get(t, Fraction(0)) + p
    return DominatingDistribution.from_map(out)
