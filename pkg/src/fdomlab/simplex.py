"""Exact rational simplex for LPs in the standard form

    maximise c.x   subject to   Ax <= b,  x >= 0.

Dense two-phase tableau over Fractions with Bland's pivoting rule, so the
solver terminates on every input.  The optimal dual vector is read off the
slack columns of the final tableau and the primal/dual pair is checked for
feasibility and equal objectives before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence


class LPError(ValueError):
    pass


class LPInfeasible(LPError):
    pass


class LPUnbounded(LPError):
    pass


@dataclass
class SimplexResult:
    status: Literal["optimal"]
    value: Fraction
    x: list[Fraction]
    y: list[Fraction]  # dual values, one per constraint


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col] != 0:
            f = tab[r][col]
            tab[r] = [a - f * p for a, p in zip(tab[r], tab[row])]
    basis[row] = col


def _run_simplex(tab: list[list[Fraction]], basis: list[int], ncols: int,
                 allowed: Sequence[bool], bland_after: int = 40) -> None:
    """Maximise the objective stored (negated) in the last tableau row.

    Pivoting starts with Dantzig's rule for speed and switches to Bland's
    rule after a run of degenerate pivots, which guarantees termination.
    """
    zrow = len(tab) - 1
    degenerate_run = 0
    while True:
        col = -1
        if degenerate_run < bland_after:
            best_red = Fraction(0)
            for j in range(ncols):
                if allowed[j] and tab[zrow][j] < best_red:
                    best_red = tab[zrow][j]
                    col = j
        else:
            for j in range(ncols):
                if allowed[j] and tab[zrow][j] < 0:
                    col = j
                    break
        if col < 0:
            return
        row, best = -1, None
        for r in range(zrow):
            if tab[r][col] > 0:
                ratio = tab[r][-1] / tab[r][col]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[row]):
                    row, best = r, ratio
        if row < 0:
            raise LPUnbounded("objective unbounded above")
        degenerate_run = degenerate_run + 1 if best == 0 else 0
        _pivot(tab, basis, row, col)


def simplex_exact(c: Sequence[Fraction], rows: Sequence[Sequence[Fraction]],
                  b: Sequence[Fraction]) -> SimplexResult:
    """Solve max c.x s.t. rows.x <= b, x >= 0 exactly.

    Raises LPInfeasible / LPUnbounded; otherwise returns the optimum with a
    complementary primal/dual pair (verified before returning).
    """
    m, n = len(rows), len(c)
    if len(b) != m or any(len(r) != n for r in rows):
        raise LPError("dimension mismatch")
    c = [Fraction(v) for v in c]
    b = [Fraction(v) for v in b]
    A = [[Fraction(v) for v in r] for r in rows]

    # columns: n structural | m slack | (phase-1 artificials) | rhs
    flip = [bi < 0 for bi in b]
    nart = sum(flip)
    total = n + m + nart
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    k = 0
    for i in range(m):
        row = [Fraction(0)] * (total + 1)
        sgn = -1 if flip[i] else 1
        for j in range(n):
            row[j] = sgn * A[i][j]
        row[n + i] = Fraction(sgn)
        row[-1] = sgn * b[i]
        if flip[i]:
            col = n + m + k
            row[col] = Fraction(1)
            art_cols.append(col)
            basis.append(col)
            k += 1
        else:
            basis.append(n + i)
        tab.append(row)

    if nart:
        # phase 1: maximise -sum(artificials)
        zrow = [Fraction(0)] * (total + 1)
        for col in art_cols:
            zrow[col] = Fraction(1)
        tab.append(zrow)
        for r, bc in enumerate(basis):
            if bc in art_cols and tab[-1][bc] != 0:
                f = tab[-1][bc]
                tab[-1] = [a - f * p for a, p in zip(tab[-1], tab[r])]
        allowed = [True] * total
        _run_simplex(tab, basis, total, allowed)
        if tab[-1][-1] != 0:
            raise LPInfeasible("no feasible point")
        tab.pop()
        # drive any degenerate artificials out of the basis
        for r in range(m):
            if basis[r] in art_cols:
                piv = next((j for j in range(n + m) if tab[r][j] != 0), None)
                if piv is None:
                    continue  # redundant row, harmless to keep
                _pivot(tab, basis, r, piv)

    zrow = [Fraction(0)] * (total + 1)
    for j in range(n):
        zrow[j] = -c[j]
    tab.append(zrow)
    for r, bc in enumerate(basis):
        if bc < n + m and tab[-1][bc] != 0:
            f = tab[-1][bc]
            tab[-1] = [a - f * p for a, p in zip(tab[-1], tab[r])]
    allowed = [j < n + m for j in range(total)]
    _run_simplex(tab, basis, total, allowed)

    x = [Fraction(0)] * n
    for r, bc in enumerate(basis):
        if bc < n:
            x[bc] = tab[r][-1]
    y = [tab[-1][n + i] for i in range(m)]
    value = tab[-1][-1]

    _check_pair(c, A, b, x, y, value)
    return SimplexResult("optimal", value, x, y)


def _check_pair(c, A, b, x, y, value) -> None:
    n, m = len(c), len(A)
    if any(xi < 0 for xi in x):
        raise LPError("internal: primal negativity")
    for i in range(m):
        if sum(A[i][j] * x[j] for j in range(n)) > b[i]:
            raise LPError("internal: primal infeasibility")
    if any(yi < 0 for yi in y):
        raise LPError("internal: dual negativity")
    for j in range(n):
        if sum(A[i][j] * y[i] for i in range(m)) < c[j]:
            raise LPError("internal: dual infeasibility")
    primal_obj = sum(ci * xi for ci, xi in zip(c, x))
    dual_obj = sum(bi * yi for bi, yi in zip(b, y))
    if not (primal_obj == dual_obj == value):
        raise LPError("internal: duality gap")
