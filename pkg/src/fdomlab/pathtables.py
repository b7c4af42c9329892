"""Colouring tables for suspended paths.

For a path u_0..u_l and k = ceil(l/3), three (3k-1 : k)-colourings are
built from closed formulas; all three give every vertex exactly k colours
and make every internal closed neighbourhood span the whole palette.  The
pair (phi0, phi1) selected by l mod 3 additionally satisfies

    phi0(u_0) and phi0(u_l) disjoint,      phi1(u_0) = phi1(u_l),

which is exactly the shape the pair-extension step consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .distributions import DistributionError, FractionalColouring


@dataclass(frozen=True)
class PathColouringTable:
    length: int
    k: int
    lam: FractionalColouring
    mu: FractionalColouring
    nu: FractionalColouring
    phi0: FractionalColouring  # endpoint colour sets disjoint
    phi1: FractionalColouring  # endpoint colour sets equal


def _lambda_sets(l: int, k: int) -> list[frozenset[int]]:
    out = []
    for i in range(l + 1):
        m = i % 3
        if m == 0:
            out.append(frozenset(range(1, k + 1)))
        elif m == 1:
            out.append(frozenset(range(k + 1, 2 * k + 1)))
        else:
            out.append(frozenset(range(2 * k, 3 * k)))  # {2k, ..., 3k-1}
    return out


def _mu_sets(l: int, k: int) -> list[frozenset[int]]:
    p = 3 * k - 1
    return [frozenset(((i * k + j) % p) + 1 for j in range(k)) for i in range(l + 1)]


def _nu_sets(l: int, k: int) -> list[frozenset[int]]:
    out = []
    for i in range(l + 1):
        j, m = divmod(i, 3)
        if m == 0:
            out.append(frozenset(range(j + 1, k + j + 1)))
        elif m == 1:
            out.append(frozenset(range(1, j + 2)) | frozenset(range(k + j + 1, 2 * k)))
        else:
            out.append(frozenset(range(2 * k, 3 * k)))
    return out


def path_tables(l: int) -> PathColouringTable:
    if l < 1:
        raise DistributionError("path length must be >= 1")
    k = ceil(l / 3)
    p = 3 * k - 1
    lam = FractionalColouring(p, k, tuple(_lambda_sets(l, k)))
    mu = FractionalColouring(p, k, tuple(_mu_sets(l, k)))
    nu = FractionalColouring(p, k, tuple(_nu_sets(l, k)))
    for phi in (lam, mu, nu):
        _check_internal_spans(phi, l, p)
    if l == 3 * k - 2:
        phi0, phi1 = lam, nu
    elif l == 3 * k - 1:
        phi0, phi1 = lam, mu
    else:
        phi0, phi1 = mu, lam
    if phi0.assignment[0] & phi0.assignment[l]:
        raise DistributionError("internal: phi0 endpoints not disjoint")
    if phi1.assignment[0] != phi1.assignment[l]:
        raise DistributionError("internal: phi1 endpoints differ")
    return PathColouringTable(l, k, lam, mu, nu, phi0, phi1)


def _check_internal_spans(phi: FractionalColouring, l: int, p: int) -> None:
    for i in range(1, l):
        span = phi.assignment[i - 1] | phi.assignment[i] | phi.assignment[i + 1]
        if len(span) != p:
            raise DistributionError(
                f"internal: path table misses colours at position {i}")
